#include "pso/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace pso {

namespace {

std::vector<ParticleAttributes> materialize_attributes(const RunConfig &config)
{
    std::vector<ParticleAttributes> attrs(config.swarm_size, config.defaults);
    for (const auto &[index, bundle] : config.overrides) {
        if (index >= attrs.size())
            throw std::invalid_argument("override index out of range");
        attrs[index] = bundle;
    }
    return attrs;
}

std::vector<LocalSociometrySpec> sociometry_specs(const std::vector<ParticleAttributes> &attrs)
{
    std::vector<LocalSociometrySpec> specs;
    specs.reserve(attrs.size());
    for (const auto &a : attrs)
        specs.push_back(a.sociometry);
    return specs;
}

void check_attribute_invariants(const ParticleAttributes &a)
{
    validate_distribution(a.omega);
    validate_distribution(a.phi);
    if (min_support(a.phi) < 0.0)
        throw std::invalid_argument("phi distribution must not produce negative draws");
    if (std::holds_alternative<CoupledClassical>(a.combiner) &&
        !std::holds_alternative<SumOfTwoUniforms>(a.phi))
        throw std::invalid_argument(
            "coupled attractor needs the two-part phi (sum of two uniforms)");
    if (const auto *dec = std::get_if<DecoupledConvex>(&a.combiner)) {
        validate_distribution(dec->lambda_distribution);
        if (min_support(dec->lambda_distribution) < 0.0 ||
            max_support(dec->lambda_distribution) > 1.0)
            throw std::invalid_argument("lambda distribution support must lie in [0, 1]");
    }
    if (const auto *pen = std::get_if<Penalty>(&a.cht)) {
        if (pen->exponent < 1.0)
            throw std::invalid_argument("penalty exponent must be >= 1");
        for (double c : pen->coefficients)
            if (!(c >= 0.0))
                throw std::invalid_argument("penalty coefficients must be >= 0");
    }
}

/// per-scaling draws of a single coefficient
std::vector<double> sample_scaled(const CoefficientDistribution &dist, ScalingMode mode,
                                  std::size_t dims, RandomStream &rng)
{
    std::vector<double> out(dims);
    if (mode == ScalingMode::Vector) {
        const double v = sample_coefficient(dist, rng);
        std::fill(out.begin(), out.end(), v);
    } else {
        for (std::size_t j = 0; j < dims; ++j)
            out[j] = sample_coefficient(dist, rng);
    }
    return out;
}

const ConstraintHandler kReportingComparator = PriorityRules{};

} // namespace

config_error::config_error(std::vector<std::string> problems)
    : std::runtime_error([&problems] {
          std::ostringstream os;
          os << "invalid configuration:";
          for (const auto &p : problems)
              os << "\n  - " << p;
          return os.str();
      }()),
      issues(std::move(problems))
{
}

std::vector<std::string> validate(const RunConfig &config, const ProblemRegistry &registry)
{
    std::vector<std::string> issues;
    auto complain = [&issues](const std::string &path, const std::string &message) {
        issues.push_back(path + ": " + message);
    };

    std::size_t constraint_count = 0;
    bool problem_resolved = false;
    if (config.problem.empty()) {
        complain("problem.name", "missing problem name");
    } else if (!registry.contains(config.problem)) {
        complain("problem.name", "unknown problem '" + config.problem + "'");
    } else {
        try {
            constraint_count = registry.make(config.problem, config.dimension).constraints.size();
            problem_resolved = true;
        } catch (const std::exception &e) {
            complain("problem.dimension", e.what());
        }
    }
    if (config.dimension == 0)
        complain("problem.dimension", "must be >= 1");
    if (config.swarm_size == 0)
        complain("swarm.size", "must be >= 1");

    try {
        config.termination.validate();
    } catch (const std::exception &e) {
        complain("termination", e.what());
    }

    if (const auto *pert = std::get_if<Perturbation>(&config.init.relation)) {
        if (!(pert->radius_fraction > 0.0 && pert->radius_fraction <= 1.0))
            complain("init.relation.radius_fraction", "must be in (0, 1]");
    }

    if (config.displacement_cap && !(*config.displacement_cap > 0.0))
        complain("swarm.displacement_cap", "must be > 0 when set");

    auto check_bundle = [&](const ParticleAttributes &a, const std::string &path) {
        try {
            check_attribute_invariants(a);
        } catch (const std::exception &e) {
            complain(path, e.what());
        }
        if (const auto *pen = std::get_if<Penalty>(&a.cht)) {
            if (problem_resolved && pen->coefficients.size() != constraint_count)
                complain(path + ".cht.coefficients",
                         "need one coefficient per problem constraint");
        }
        if (config.swarm_size > 0) {
            try {
                build_local_neighbourhood(a.sociometry, 0, config.swarm_size);
            } catch (const std::exception &e) {
                complain(path + ".topology", e.what());
            }
        }
    };

    check_bundle(config.defaults, "defaults");
    for (std::size_t k = 0; k < config.overrides.size(); ++k) {
        const auto &[index, bundle] = config.overrides[k];
        const std::string path = "overrides[" + std::to_string(k) + "]";
        if (index >= config.swarm_size)
            complain(path + ".particle", "index out of range");
        check_bundle(bundle, path);
    }

    if (issues.empty() && config.swarm_size > 0) {
        try {
            assemble_connectivity(sociometry_specs(materialize_attributes(config)));
        } catch (const std::exception &e) {
            complain("topology", e.what());
        }
    }
    return issues;
}

std::vector<double> apply_boundary_policy(std::vector<double> x, const SearchBounds &bounds,
                                          BoundaryPolicy policy)
{
    if (policy == BoundaryPolicy::None)
        return x;
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double lo = bounds.lower[d], hi = bounds.upper[d];
        if (policy == BoundaryPolicy::Reflect) {
            if (x[d] > hi)
                x[d] = hi - (x[d] - hi);
            else if (x[d] < lo)
                x[d] = lo + (lo - x[d]);
        }
        x[d] = std::clamp(x[d], lo, hi);
    }
    return x;
}

Swarm::Swarm(const RunConfig &config, const ProblemRegistry &registry)
    : problem_(registry.make(config.problem, config.dimension)),
      matrix_(assemble_connectivity(sociometry_specs(materialize_attributes(config)))),
      synchrony_(config.synchrony),
      boundary_(config.boundary),
      displacement_cap_(config.displacement_cap)
{
    const std::size_t m = config.swarm_size;
    const auto attrs = materialize_attributes(config);
    for (const auto &a : attrs)
        check_attribute_invariants(a);

    const RandomStream master(config.seed);
    RandomStream init_stream = master.substream(0);
    streams_.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        streams_.push_back(master.substream(1 + i));

    std::vector<ConstraintHandler> chts;
    chts.reserve(m);
    for (const auto &a : attrs)
        chts.push_back(a.cht);

    const auto init = initialize_swarm(
        config.init.condition, config.init.relation, config.init.method, m, problem_.bounds,
        [this](const std::vector<double> &x) { return evaluate(problem_, x); }, chts,
        init_stream);

    particles_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        ParticleState &ps = particles_[i];
        ps.index = i;
        ps.x_curr = init[i].x1;
        ps.x_prev = init[i].x0;
        ps.eval_curr = init[i].eval_x1;
        ps.memory = {init[i].xm, init[i].eval_xm};
        ps.attributes = attrs[i];
    }
}

Evaluation Swarm::evaluate_with_context(const std::vector<double> &x, std::size_t i) const
{
    try {
        return evaluate(problem_, x);
    } catch (const std::exception &e) {
        throw std::runtime_error("iteration " + std::to_string(iteration_ + 1) + ", particle " +
                                 std::to_string(i) + ": evaluation failed: " + e.what());
    }
}

void Swarm::update_particle(std::size_t i, const SwarmView &view,
                            std::vector<MemoryRecord> *staged)
{
    ParticleState &ps = particles_[i];
    RandomStream &rng = streams_[i];
    const std::size_t dims = problem_.dimension;

    const auto candidates = gather(i, matrix_, view, ps.attributes.gathering);
    const auto social = select_social_attractor(candidates, ps.attributes.cht);
    const std::vector<double> &xb_i = ps.memory.position;
    const std::vector<double> &xb_k = social ? social->position : ps.memory.position;

    std::vector<double> x_new(dims);
    if (std::holds_alternative<CoupledClassical>(ps.attributes.combiner)) {
        // Classical coupled update. The acceleration is applied as the
        // two-term form iota (xb_i - x) + sigma (xb_k - x); the overall
        // attractor (iota xb_i + sigma xb_k) / (iota + sigma) is the same
        // point, and the two-term form stays exact when iota + sigma = 0
        // (the particle then coasts on inertia).
        const auto &two_part = std::get<SumOfTwoUniforms>(ps.attributes.phi);
        std::vector<std::pair<double, double>> parts(dims);
        if (ps.attributes.scaling == ScalingMode::Vector) {
            const auto pair = sample_phi_parts(two_part, rng);
            std::fill(parts.begin(), parts.end(), pair);
        } else {
            for (std::size_t j = 0; j < dims; ++j)
                parts[j] = sample_phi_parts(two_part, rng);
        }
        const auto omega = sample_scaled(ps.attributes.omega, ps.attributes.scaling, dims, rng);
        for (std::size_t j = 0; j < dims; ++j) {
            const double x = ps.x_curr[j];
            x_new[j] = x + omega[j] * (x - ps.x_prev[j]) + parts[j].first * (xb_i[j] - x) +
                       parts[j].second * (xb_k[j] - x);
        }
    } else {
        const auto p = combine_attractors(ps.attributes.combiner, xb_i, xb_k, nullptr, rng);
        const auto coeffs = sample_scaled_coefficients(ps.attributes.phi, ps.attributes.omega,
                                                       ps.attributes.scaling, dims, rng);
        for (std::size_t j = 0; j < dims; ++j) {
            const double x = ps.x_curr[j];
            x_new[j] = x + coeffs.omega[j] * (x - ps.x_prev[j]) + coeffs.phi[j] * (p[j] - x);
        }
    }

    if (displacement_cap_) {
        for (std::size_t j = 0; j < dims; ++j) {
            const double delta =
                std::clamp(x_new[j] - ps.x_curr[j], -*displacement_cap_, *displacement_cap_);
            x_new[j] = ps.x_curr[j] + delta;
        }
    }
    x_new = apply_boundary_policy(std::move(x_new), problem_.bounds, boundary_);

    Evaluation eval_new = evaluate_with_context(x_new, i);
    ps.x_prev = std::move(ps.x_curr);
    ps.x_curr = std::move(x_new);
    ps.eval_curr = std::move(eval_new);

    const MemoryRecord candidate{ps.x_curr, ps.eval_curr};
    MemoryRecord updated = update_memory(ps.memory, candidate, ps.attributes.cht);
    if (staged)
        (*staged)[i] = std::move(updated);
    else
        ps.memory = std::move(updated);
}

void Swarm::step()
{
    const std::size_t m = particles_.size();

    std::vector<std::vector<double>> mem_pos(m), cur_pos(m);
    std::vector<Evaluation> mem_eval(m), cur_eval(m);
    auto refresh = [&] {
        for (std::size_t i = 0; i < m; ++i) {
            mem_pos[i] = particles_[i].memory.position;
            mem_eval[i] = particles_[i].memory.evaluation;
            cur_pos[i] = particles_[i].x_curr;
            cur_eval[i] = particles_[i].eval_curr;
        }
    };
    const SwarmView view{mem_pos, mem_eval, cur_pos, cur_eval};

    if (synchrony_ == SynchronyMode::Synchronous) {
        refresh();  // freeze the previous iteration
        std::vector<MemoryRecord> staged(m);
        for (std::size_t i = 0; i < m; ++i)
            update_particle(i, view, &staged);
        for (std::size_t i = 0; i < m; ++i)
            particles_[i].memory = std::move(staged[i]);
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            refresh();  // ascending order, every earlier commit visible
            update_particle(i, view, nullptr);
        }
    }
    ++iteration_;
}

const ParticleState &Swarm::reporting_best() const
{
    const ParticleState *best = &particles_.front();
    for (const auto &ps : particles_) {
        if (compare(ps.memory.evaluation, best->memory.evaluation, kReportingComparator) ==
            Ordering::ABetter)
            best = &ps;
    }
    return *best;
}

std::vector<std::vector<double>> Swarm::current_positions() const
{
    std::vector<std::vector<double>> out;
    out.reserve(particles_.size());
    for (const auto &ps : particles_)
        out.push_back(ps.x_curr);
    return out;
}

RunResult run(const RunConfig &config, const ProblemRegistry &registry,
              const IterationObserver &observer)
{
    const auto issues = validate(config, registry);
    if (!issues.empty())
        throw config_error(issues);

    Swarm swarm(config, registry);
    RunResult result;
    result.seed = config.seed;

    auto record = [&](std::size_t iteration) {
        const double best = swarm.reporting_best().memory.evaluation.objective;
        const double diversity = swarm_diversity(swarm.current_positions());
        result.trace.push_back({iteration, best, diversity});
        if (config.output.full_dump) {
            for (const auto &ps : swarm.particles())
                for (std::size_t d = 0; d < ps.x_curr.size(); ++d)
                    result.dump.push_back(
                        {iteration, ps.index, d, ps.x_curr[d], ps.memory.position[d]});
        }
        return diversity;
    };

    double diversity = record(0);
    if (observer)
        observer(swarm.particles(), 0);

    std::deque<double> history;
    while (true) {
        SwarmStatistics stats;
        stats.iteration = swarm.iteration();
        stats.best_memory_objective = swarm.reporting_best().memory.evaluation.objective;
        stats.swarm_diversity = diversity;
        stats.best_history = history;

        const StopDecision decision = should_stop(stats, config.termination);
        if (decision.stop) {
            result.reason = decision.reason;
            break;
        }

        swarm.step();
        diversity = record(swarm.iteration());
        if (config.termination.convergence) {
            history.push_back(swarm.reporting_best().memory.evaluation.objective);
            if (history.size() > config.termination.convergence->window)
                history.pop_front();
        }
        if (observer)
            observer(swarm.particles(), swarm.iteration());
    }

    result.iterations = swarm.iteration();
    const ParticleState &best = swarm.reporting_best();
    result.best_position = best.memory.position;
    result.best_evaluation = best.memory.evaluation;
    return result;
}

RunResult run(const RunConfig &config)
{
    return run(config, ProblemRegistry::with_builtins());
}

std::vector<ParticleInit> preview_initialization(const RunConfig &config,
                                                 const ProblemRegistry &registry)
{
    const auto issues = validate(config, registry);
    if (!issues.empty())
        throw config_error(issues);

    const Problem problem = registry.make(config.problem, config.dimension);
    const auto attrs = materialize_attributes(config);
    std::vector<ConstraintHandler> chts;
    for (const auto &a : attrs)
        chts.push_back(a.cht);

    RandomStream init_stream = RandomStream(config.seed).substream(0);
    return initialize_swarm(
        config.init.condition, config.init.relation, config.init.method, config.swarm_size,
        problem.bounds, [&problem](const std::vector<double> &x) { return evaluate(problem, x); },
        chts, init_stream);
}

} // namespace pso
