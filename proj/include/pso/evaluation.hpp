#ifndef PSO_EVALUATION_HPP
#define PSO_EVALUATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace pso {

/// Absolute per-constraint tolerance under which a violation still counts as
/// feasible.
inline constexpr double kFeasibilityTolerance = 1e-9;

/// Objective value (minimisation) plus per-constraint violation magnitudes.
/// Objective and violations are kept separate; how they trade off is decided
/// by the constraint-handling technique, not here.
struct Evaluation
{
    double objective = 0.0;
    std::vector<double> violations;
    bool feasible = true;

    Evaluation() = default;

    Evaluation(double obj, std::vector<double> viols,
               double tolerance = kFeasibilityTolerance)
        : objective(obj), violations(std::move(viols))
    {
        feasible = max_violation() <= tolerance;
    }

    double max_violation() const
    {
        double m = 0.0;
        for (double v : violations)
            m = std::max(m, v);
        return m;
    }

    double total_violation() const
    {
        return std::accumulate(violations.begin(), violations.end(), 0.0);
    }

    bool operator==(const Evaluation &) const = default;
};

} // namespace pso

#endif // PSO_EVALUATION_HPP
