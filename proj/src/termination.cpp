#include "pso/termination.hpp"

#include <cmath>
#include <stdexcept>

namespace pso {

void TerminationConfig::validate() const
{
    if (!t_max && !diversity_threshold && !convergence)
        throw std::invalid_argument("TerminationConfig: at least one criterion must be enabled");
    if (t_max && *t_max < 1)
        throw std::invalid_argument("TerminationConfig: t_max must be >= 1");
    if (diversity_threshold && !(*diversity_threshold >= 0.0))
        throw std::invalid_argument("TerminationConfig: diversity_threshold must be >= 0");
    if (convergence) {
        if (!(convergence->epsilon >= 0.0))
            throw std::invalid_argument("TerminationConfig: convergence epsilon must be >= 0");
        if (convergence->window < 1)
            throw std::invalid_argument("TerminationConfig: convergence window must be >= 1");
    }
}

double swarm_diversity(const std::vector<std::vector<double>> &positions)
{
    if (positions.empty())
        throw std::invalid_argument("swarm_diversity: needs at least one position");
    const std::size_t m = positions.size();
    const std::size_t dims = positions.front().size();

    std::vector<double> centroid(dims, 0.0);
    for (const auto &x : positions)
        for (std::size_t d = 0; d < dims; ++d)
            centroid[d] += x[d];
    for (double &c : centroid)
        c /= static_cast<double>(m);

    double total = 0.0;
    for (const auto &x : positions) {
        double sq = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            const double delta = x[d] - centroid[d];
            sq += delta * delta;
        }
        total += std::sqrt(sq);
    }
    return total / static_cast<double>(m);
}

StopDecision should_stop(const SwarmStatistics &stats, const TerminationConfig &config)
{
    if (config.t_max && stats.iteration >= *config.t_max)
        return {true, TerminationReason::SearchLength};
    if (config.diversity_threshold && stats.swarm_diversity < *config.diversity_threshold)
        return {true, TerminationReason::Clustering};
    if (config.convergence && stats.best_history.size() >= config.convergence->window) {
        const double improvement = stats.best_history.front() - stats.best_history.back();
        if (improvement < config.convergence->epsilon)
            return {true, TerminationReason::Convergence};
    }
    return {false, TerminationReason::None};
}

const char *to_string(TerminationReason reason)
{
    switch (reason) {
    case TerminationReason::None:         return "none";
    case TerminationReason::SearchLength: return "search_length";
    case TerminationReason::Clustering:   return "clustering";
    case TerminationReason::Convergence:  return "convergence";
    }
    return "unknown";
}

} // namespace pso
