#ifndef PSO_TERMINATION_HPP
#define PSO_TERMINATION_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

namespace pso {

/// Window-based convergence criterion: stop once the best value improved by
/// less than epsilon across the last `window` recorded iterations.
struct ConvergenceCriterion
{
    double epsilon = 0.0;
    std::size_t window = 1;
    bool operator==(const ConvergenceCriterion &) const = default;
};

/// The three termination families. At least one must be enabled.
struct TerminationConfig
{
    std::optional<std::size_t> t_max;                  ///< search length
    std::optional<double> diversity_threshold;         ///< clustering
    std::optional<ConvergenceCriterion> convergence;   ///< convergence measure

    void validate() const;

    bool operator==(const TerminationConfig &) const = default;
};

enum class TerminationReason { None, SearchLength, Clustering, Convergence };

/// Per-iteration snapshot consumed by the stop decision.
struct SwarmStatistics
{
    std::size_t iteration = 0;
    double best_memory_objective = 0.0;
    double swarm_diversity = 0.0;
    std::deque<double> best_history;  ///< most recent last, length <= window
};

struct StopDecision
{
    bool stop = false;
    TerminationReason reason = TerminationReason::None;
};

/// Mean Euclidean distance of the particles to the swarm centroid.
double swarm_diversity(const std::vector<std::vector<double>> &positions);

/// Criteria are checked in priority order: search length, then clustering,
/// then convergence (the latter only once the history window is full).
StopDecision should_stop(const SwarmStatistics &stats, const TerminationConfig &config);

const char *to_string(TerminationReason reason);

} // namespace pso

#endif // PSO_TERMINATION_HPP
