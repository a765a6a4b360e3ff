#ifndef PSO_ENGINE_HPP
#define PSO_ENGINE_HPP

#include "pso/bounds.hpp"
#include "pso/evaluation.hpp"
#include "pso/initialization.hpp"
#include "pso/memory.hpp"
#include "pso/problems.hpp"
#include "pso/random.hpp"
#include "pso/sociometry.hpp"
#include "pso/stochastic.hpp"
#include "pso/termination.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pso {

/// Everything that shapes one particle's behaviour. Defaults reproduce a
/// classical constricted swarm.
struct ParticleAttributes
{
    CoefficientDistribution omega = PointMass{0.7298};
    CoefficientDistribution phi = SumOfTwoUniforms{1.49618, 1.49618};
    ScalingMode scaling = ScalingMode::Component;
    AttractorCombiner combiner = CoupledClassical{};
    LocalSociometrySpec sociometry{};
    ConstraintHandler cht = PriorityRules{};
    GatheringMode gathering = GatheringMode::MemorisedOnly;

    bool operator==(const ParticleAttributes &) const = default;
};

enum class BoundaryPolicy { None, Clamp, Reflect };

struct InitSpec
{
    InitialCondition condition = InitialCondition::Stagnation;
    SampleRelation relation = Independent{};
    SamplingMethod method = SamplingMethod::UniformRandom;

    bool operator==(const InitSpec &) const = default;
};

struct OutputOptions
{
    std::optional<std::string> trace_path;
    bool full_dump = false;
    std::optional<std::string> dump_path;

    bool operator==(const OutputOptions &) const = default;
};

struct RunConfig
{
    std::string problem;
    std::size_t dimension = 2;
    std::size_t swarm_size = 20;
    std::uint64_t seed = 0;
    InitSpec init;
    TerminationConfig termination{100, {}, {}};
    ParticleAttributes defaults;
    /// Fully materialised attribute bundles replacing the defaults for the
    /// named particles.
    std::vector<std::pair<std::size_t, ParticleAttributes>> overrides;
    SynchronyMode synchrony = SynchronyMode::Synchronous;
    BoundaryPolicy boundary = BoundaryPolicy::Clamp;
    std::optional<double> displacement_cap;  ///< per-component cap, off by default
    OutputOptions output;

    bool operator==(const RunConfig &) const = default;
};

/// Configuration rejected; `issues` lists one "field.path: message" per
/// offence.
struct config_error : std::runtime_error
{
    explicit config_error(std::vector<std::string> problems);
    std::vector<std::string> issues;
};

/// Collects every validation issue instead of stopping at the first.
/// The registry decides which problem names are valid.
std::vector<std::string> validate(const RunConfig &config, const ProblemRegistry &registry);

struct ParticleState
{
    std::size_t index = 0;
    std::vector<double> x_curr;
    std::vector<double> x_prev;
    MemoryRecord memory;
    Evaluation eval_curr;
    ParticleAttributes attributes;
};

struct TraceRow
{
    std::size_t iteration = 0;
    double best_objective = 0.0;
    double diversity = 0.0;

    bool operator==(const TraceRow &) const = default;
};

struct DumpRow
{
    std::size_t iteration = 0;
    std::size_t particle = 0;
    std::size_t dim = 0;
    double x = 0.0;
    double xm = 0.0;
};

struct RunResult
{
    std::vector<double> best_position;
    Evaluation best_evaluation;
    std::size_t iterations = 0;
    TerminationReason reason = TerminationReason::None;
    std::vector<TraceRow> trace;
    std::vector<DumpRow> dump;
    std::uint64_t seed = 0;
};

/// Clamp projects onto the box; Reflect mirrors the overshoot once about the
/// violated face, then clamps; None leaves the position untouched.
std::vector<double> apply_boundary_policy(std::vector<double> x, const SearchBounds &bounds,
                                          BoundaryPolicy policy);

/// The iterating swarm. One independent random substream per particle keeps
/// runs reproducible regardless of evaluation order. Stream derivation is
/// part of the contract: RandomStream(seed).substream(0) drives
/// initialisation, substream(1 + i) drives particle i.
///
/// Per-particle update pipeline: gather -> select social attractor (own
/// handler; falls back to the particle's own memory when nothing is
/// admissible) -> combine attractors -> sample trajectory coefficients ->
/// position update per dimension -> displacement cap -> boundary policy ->
/// evaluate -> memory update. Draw order per update: combiner draws first
/// (lambda, or the coupled iota/sigma pairs), then omega, then phi where the
/// combiner did not already fix it.
class Swarm
{
public:
    Swarm(const RunConfig &config, const ProblemRegistry &registry);

    /// One iteration. Synchronous mode gathers from a frozen snapshot of the
    /// previous iteration and commits memories at the barrier; asynchronous
    /// mode updates particles in ascending index order, each seeing all
    /// earlier commits.
    void step();

    const std::vector<ParticleState> &particles() const { return particles_; }
    std::vector<ParticleState> &particles() { return particles_; }
    const ConnectivityMatrix &connectivity() const { return matrix_; }
    const Problem &problem() const { return problem_; }
    std::size_t iteration() const { return iteration_; }

    /// Reporting order across heterogeneous handlers: priority rules.
    const ParticleState &reporting_best() const;

    std::vector<std::vector<double>> current_positions() const;

private:
    void update_particle(std::size_t i, const SwarmView &view,
                         std::vector<MemoryRecord> *staged);
    Evaluation evaluate_with_context(const std::vector<double> &x, std::size_t i) const;

    Problem problem_;
    std::vector<ParticleState> particles_;
    ConnectivityMatrix matrix_;
    SynchronyMode synchrony_;
    BoundaryPolicy boundary_;
    std::optional<double> displacement_cap_;
    std::vector<RandomStream> streams_;
    std::size_t iteration_ = 0;
};

using IterationObserver =
    std::function<void(const std::vector<ParticleState> &, std::size_t iteration)>;

/// Full run: validate, initialise, iterate until a termination criterion
/// fires. Bitwise reproducible for a fixed config. The observer, when given,
/// is called after initialisation (iteration 0) and after every step.
RunResult run(const RunConfig &config, const ProblemRegistry &registry,
              const IterationObserver &observer = {});

/// Convenience overload over the builtin problem registry.
RunResult run(const RunConfig &config);

/// The (x1, x0, xm) populations a run with this config would start from,
/// produced with the same derived random stream the engine uses.
std::vector<ParticleInit> preview_initialization(const RunConfig &config,
                                                 const ProblemRegistry &registry);

} // namespace pso

#endif // PSO_ENGINE_HPP
