#ifndef PSO_MEMORY_HPP
#define PSO_MEMORY_HPP

#include "pso/evaluation.hpp"
#include "pso/sociometry.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace pso {

/// Infeasible experiences are never admitted into memory. Two infeasible
/// evaluations are incomparable under this technique.
struct PreservingFeasibility
{
    bool operator==(const PreservingFeasibility &) const = default;
};

/// Objective augmented by sum_c coef_c * violation_c^exponent.
struct Penalty
{
    std::vector<double> coefficients;
    double exponent = 1.0;
    bool operator==(const Penalty &) const = default;
};

/// Feasible beats infeasible; feasible pairs compare objectives; infeasible
/// pairs compare total violation.
struct PriorityRules
{
    bool operator==(const PriorityRules &) const = default;
};

using ConstraintHandler = std::variant<PreservingFeasibility, Penalty, PriorityRules>;

/// Extension point for schedule-driven penalties: maps the iteration and the
/// current penalty to the penalty used next. Declared for forward
/// compatibility; the engine currently applies static coefficients only.
using PenaltySchedule = std::function<Penalty(std::size_t iteration, const Penalty &current)>;

enum class Ordering
{
    ABetter,
    BBetter,
    Tie,
    /// PreservingFeasibility over two infeasible evaluations; callers must
    /// not admit either into memory.
    Incomparable,
};

enum class GatheringMode { MemorisedOnly, CurrentOnly, Both };
enum class SynchronyMode { Synchronous, Asynchronous };

Ordering compare(const Evaluation &a, const Evaluation &b, const ConstraintHandler &cht);

/// Throws std::invalid_argument if the constraint count does not match the
/// penalty coefficient count.
double penalised_value(const Evaluation &e, const Penalty &penalty);

struct Candidate
{
    std::size_t source = 0;            ///< informer index
    bool from_memory = true;           ///< memory record vs current record
    std::vector<double> position;
    Evaluation evaluation;
};

/// Read-only view of the swarm the gatherer consults. In synchronous mode the
/// engine points this at the previous iteration's frozen snapshot.
struct SwarmView
{
    std::span<const std::vector<double>> memory_positions;
    std::span<const Evaluation> memory_evaluations;
    std::span<const std::vector<double>> current_positions;
    std::span<const Evaluation> current_evaluations;
};

/// Candidates visible to particle i: one record per informer per enabled
/// record type, informers ascending, memory before current. A self-inclusive
/// particle is its own informer and contributes per the same mode.
std::vector<Candidate> gather(std::size_t i, const ConnectivityMatrix &matrix,
                              const SwarmView &swarm, GatheringMode mode);

/// Comparator-best candidate; ties resolve to the earliest gathered entry
/// (lowest source index). Empty result only under PreservingFeasibility with
/// every candidate infeasible; the engine then falls back to the particle's
/// own memory.
std::optional<Candidate> select_social_attractor(const std::vector<Candidate> &candidates,
                                                 const ConstraintHandler &cht);

struct MemoryRecord
{
    std::vector<double> position;
    Evaluation evaluation;
    bool operator==(const MemoryRecord &) const = default;
};

/// Comparator-better of incumbent and candidate; the incumbent wins ties.
/// PreservingFeasibility admits no infeasible candidate while the incumbent
/// is feasible; an infeasible incumbent (cold start) is improved by priority
/// rules until the first feasible candidate locks the memory to feasibility.
MemoryRecord update_memory(const MemoryRecord &current, const MemoryRecord &candidate,
                           const ConstraintHandler &cht);

} // namespace pso

#endif // PSO_MEMORY_HPP
