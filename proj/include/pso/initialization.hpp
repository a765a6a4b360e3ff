#ifndef PSO_INITIALIZATION_HPP
#define PSO_INITIALIZATION_HPP

#include "pso/bounds.hpp"
#include "pso/evaluation.hpp"
#include "pso/memory.hpp"
#include "pso/random.hpp"

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

namespace pso {

enum class SamplingMethod { UniformRandom, LatinHypercube };

enum class InitialCondition
{
    Stagnation,             ///< x1 = x0 = xm, one sample
    TwoPositions,           ///< better of two -> x1, other -> x0, xm = x1
    OnePositionOneMemory,   ///< better of two -> xm, other -> x1 = x0
    TwoPositionsOneMemory,  ///< best of three -> xm, better remainder -> x1
};

/// Extra points are uniform offsets within +/- radius_fraction of each
/// dimension's range around the primary point, clamped to the bounds.
struct Perturbation
{
    double radius_fraction = 0.05;
    bool operator==(const Perturbation &) const = default;
};

/// Each population sampled on its own.
struct Independent
{
    bool operator==(const Independent &) const = default;
};

/// All populations drawn as one joint sampling and split round-robin, so a
/// stratified method stratifies the union.
struct Simultaneous
{
    bool operator==(const Simultaneous &) const = default;
};

using SampleRelation = std::variant<Perturbation, Independent, Simultaneous>;

/// n points inside bounds. Latin hypercube additionally places exactly one
/// point in each of the n equal-width strata per dimension.
std::vector<std::vector<double>> sample_positions(SamplingMethod method, std::size_t n,
                                                  const SearchBounds &bounds,
                                                  RandomStream &rng);

/// All populations needed alongside `primary`, with [0] being the primary
/// population itself: echoed for Perturbation and Independent, regenerated as
/// part of the joint sampling for Simultaneous (the union, not the parts,
/// carries the stratification there).
std::vector<std::vector<std::vector<double>>> relate_samples(
    const SampleRelation &relation, const std::vector<std::vector<double>> &primary,
    std::size_t extra_needed, SamplingMethod method, const SearchBounds &bounds,
    RandomStream &rng);

struct ParticleInit
{
    std::vector<double> x1;
    std::vector<double> x0;
    std::vector<double> xm;
    Evaluation eval_x1;
    Evaluation eval_x0;
    Evaluation eval_xm;
};

using Evaluator = std::function<Evaluation(const std::vector<double> &)>;

/// Sets (x1, x0, xm) for every particle. Each sampled point is evaluated
/// exactly once: m evaluations for Stagnation, 2m for TwoPositions and
/// OnePositionOneMemory, 3m for TwoPositionsOneMemory. "Better" is decided by
/// the owning particle's constraint handler; ties go to the lower sample
/// index. chts must hold either one handler (swarm-wide) or m handlers.
std::vector<ParticleInit> initialize_swarm(InitialCondition condition,
                                           const SampleRelation &relation,
                                           SamplingMethod method, std::size_t m,
                                           const SearchBounds &bounds,
                                           const Evaluator &evaluator,
                                           const std::vector<ConstraintHandler> &chts,
                                           RandomStream &rng);

} // namespace pso

#endif // PSO_INITIALIZATION_HPP
