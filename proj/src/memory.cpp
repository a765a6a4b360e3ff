#include "pso/memory.hpp"

#include <cmath>
#include <stdexcept>

namespace pso {

namespace {

Ordering order_by(double a, double b)
{
    if (a < b)
        return Ordering::ABetter;
    if (b < a)
        return Ordering::BBetter;
    return Ordering::Tie;
}

Ordering priority_rules_compare(const Evaluation &a, const Evaluation &b)
{
    if (a.feasible != b.feasible)
        return a.feasible ? Ordering::ABetter : Ordering::BBetter;
    if (a.feasible)
        return order_by(a.objective, b.objective);
    return order_by(a.total_violation(), b.total_violation());
}

} // namespace

double penalised_value(const Evaluation &e, const Penalty &penalty)
{
    if (penalty.coefficients.size() != e.violations.size())
        throw std::invalid_argument("penalised_value: coefficient count mismatch");
    double value = e.objective;
    for (std::size_t c = 0; c < e.violations.size(); ++c)
        value += penalty.coefficients[c] * std::pow(e.violations[c], penalty.exponent);
    return value;
}

Ordering compare(const Evaluation &a, const Evaluation &b, const ConstraintHandler &cht)
{
    return std::visit(
        [&](const auto &handler) -> Ordering {
            using T = std::decay_t<decltype(handler)>;
            if constexpr (std::is_same_v<T, PreservingFeasibility>) {
                if (a.feasible && b.feasible)
                    return order_by(a.objective, b.objective);
                if (a.feasible != b.feasible)
                    return a.feasible ? Ordering::ABetter : Ordering::BBetter;
                return Ordering::Incomparable;
            } else if constexpr (std::is_same_v<T, Penalty>) {
                return order_by(penalised_value(a, handler), penalised_value(b, handler));
            } else {
                return priority_rules_compare(a, b);
            }
        },
        cht);
}

std::vector<Candidate> gather(std::size_t i, const ConnectivityMatrix &matrix,
                              const SwarmView &swarm, GatheringMode mode)
{
    std::vector<Candidate> out;
    for (std::size_t j : matrix.informers_of(i)) {
        if (mode == GatheringMode::MemorisedOnly || mode == GatheringMode::Both)
            out.push_back({j, true, swarm.memory_positions[j], swarm.memory_evaluations[j]});
        if (mode == GatheringMode::CurrentOnly || mode == GatheringMode::Both)
            out.push_back({j, false, swarm.current_positions[j], swarm.current_evaluations[j]});
    }
    return out;
}

std::optional<Candidate> select_social_attractor(const std::vector<Candidate> &candidates,
                                                 const ConstraintHandler &cht)
{
    if (candidates.empty())
        throw std::invalid_argument("select_social_attractor: no candidates");

    if (std::holds_alternative<PreservingFeasibility>(cht)) {
        const Candidate *best = nullptr;
        for (const auto &cand : candidates) {
            if (!cand.evaluation.feasible)
                continue;
            if (best == nullptr ||
                cand.evaluation.objective < best->evaluation.objective ||
                (cand.evaluation.objective == best->evaluation.objective &&
                 cand.source < best->source))
                best = &cand;
        }
        if (best == nullptr)
            return std::nullopt;
        return *best;
    }

    const Candidate *best = &candidates.front();
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        const Ordering ord = compare(candidates[k].evaluation, best->evaluation, cht);
        if (ord == Ordering::ABetter ||
            (ord == Ordering::Tie && candidates[k].source < best->source))
            best = &candidates[k];
    }
    return *best;
}

MemoryRecord update_memory(const MemoryRecord &current, const MemoryRecord &candidate,
                           const ConstraintHandler &cht)
{
    if (std::holds_alternative<PreservingFeasibility>(cht)) {
        if (current.evaluation.feasible) {
            if (!candidate.evaluation.feasible)
                return current;
            return candidate.evaluation.objective < current.evaluation.objective ? candidate
                                                                                  : current;
        }
        // cold start: memory not yet feasible, rank by priority rules
        return priority_rules_compare(candidate.evaluation, current.evaluation) ==
                       Ordering::ABetter
                   ? candidate
                   : current;
    }
    return compare(candidate.evaluation, current.evaluation, cht) == Ordering::ABetter
               ? candidate
               : current;
}

} // namespace pso
