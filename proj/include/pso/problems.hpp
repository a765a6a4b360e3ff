#ifndef PSO_PROBLEMS_HPP
#define PSO_PROBLEMS_HPP

#include "pso/bounds.hpp"
#include "pso/evaluation.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pso {

/// Benchmark objective with optional constraints. Constraint functions return
/// a violation magnitude: 0 when satisfied, positive otherwise.
struct Problem
{
    std::string name;
    std::size_t dimension = 0;
    SearchBounds bounds;
    std::function<double(const std::vector<double> &)> objective;
    std::vector<std::function<double(const std::vector<double> &)>> constraints;
    std::optional<std::pair<std::vector<double>, double>> known_optimum;
};

/// Objective and every violation at x. Throws std::invalid_argument on a
/// dimension mismatch.
Evaluation evaluate(const Problem &p, const std::vector<double> &x);

/// sphere, rosenbrock, rastrigin at the given dimension plus the 2-D
/// constrained sphere, with textbook bounds and recorded optima.
std::vector<Problem> builtin_suite(std::size_t dimension = 2);

/// Name -> problem factory at a requested dimension.
class ProblemRegistry
{
public:
    using Factory = std::function<Problem(std::size_t dimension)>;

    /// Registry preloaded with the builtin suite.
    static ProblemRegistry with_builtins();

    void add(const std::string &name, Factory factory);
    bool contains(const std::string &name) const;
    Problem make(const std::string &name, std::size_t dimension) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, Factory> factories_;
};

} // namespace pso

#endif // PSO_PROBLEMS_HPP
