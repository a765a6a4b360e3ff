#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pso/csv.hpp"
#include "pso/engine.hpp"
#include "pso/trajectory.hpp"
#include "cpso_reference.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

using namespace pso;

namespace {

ProblemRegistry registry_with_linear()
{
    auto registry = ProblemRegistry::with_builtins();
    registry.add("linear", [](std::size_t d) {
        return Problem{"linear", d, SearchBounds::uniform(d, -100.0, 100.0),
                       [](const std::vector<double> &x) { return x[0]; }, {}, std::nullopt};
    });
    return registry;
}

ParticleAttributes deterministic_attributes(double omega, double phi)
{
    ParticleAttributes a;
    a.omega = PointMass{omega};
    a.phi = PointMass{phi};
    a.combiner = DecoupledConvex{PointMass{0.0}, ScalingMode::Vector};  // p = social best
    return a;
}

} // namespace

TEST_CASE("boundary policies")
{
    const auto bounds = SearchBounds::uniform(1, -10.0, 10.0);
    CHECK(apply_boundary_policy({12.0}, bounds, BoundaryPolicy::Clamp) ==
          std::vector<double>{10.0});
    CHECK(apply_boundary_policy({12.0}, bounds, BoundaryPolicy::Reflect) ==
          std::vector<double>{8.0});
    CHECK(apply_boundary_policy({-11.5}, bounds, BoundaryPolicy::Reflect) ==
          std::vector<double>{-8.5});
    CHECK(apply_boundary_policy({12.0}, bounds, BoundaryPolicy::None) ==
          std::vector<double>{12.0});
    // reflect mirrors once, then clamps what is still outside
    CHECK(apply_boundary_policy({45.0}, bounds, BoundaryPolicy::Reflect) ==
          std::vector<double>{-10.0});
}

TEST_CASE("single particle at the fastest-convergence setting reaches its attractor")
{
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 1;
    config.swarm_size = 1;
    config.seed = 11;
    config.termination = {20, {}, {}};
    config.defaults = deterministic_attributes(0.0, 1.0);
    config.boundary = BoundaryPolicy::None;

    const auto result = run(config);
    REQUIRE(result.iterations == 20);
    // memory equals the stagnation sample; the particle sits on it throughout
    for (const auto &row : result.trace)
        CHECK(row.diversity == 0.0);
    CHECK(result.trace.front().best_objective == result.trace.back().best_objective);
}

TEST_CASE("engine reproduces the classical reference implementation step for step")
{
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 5;
    config.swarm_size = 10;
    config.seed = 2718;
    config.termination = {1, {}, {}};
    config.boundary = BoundaryPolicy::None;
    config.defaults.omega = PointMass{0.7298};
    config.defaults.phi = SumOfTwoUniforms{2.0, 2.0};
    config.defaults.scaling = ScalingMode::Component;
    config.defaults.combiner = CoupledClassical{};

    const auto registry = ProblemRegistry::with_builtins();
    Swarm swarm(config, registry);
    auto reference = cpso_reference::capture(swarm);

    std::vector<RandomStream> streams;
    const RandomStream master(config.seed);
    for (std::size_t i = 0; i < config.swarm_size; ++i)
        streams.push_back(master.substream(1 + i));

    for (int t = 0; t < 25; ++t) {
        swarm.step();
        cpso_reference::step(reference, swarm.problem(), 0.7298, 2.0, 2.0, streams);
        for (std::size_t i = 0; i < config.swarm_size; ++i) {
            CHECK(swarm.particles()[i].x_curr == reference.x[i]);
            CHECK(swarm.particles()[i].memory.position == reference.xm[i]);
        }
    }
}

TEST_CASE("ring topology reduces to classical lbest")
{
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 4;
    config.swarm_size = 8;
    config.seed = 515;
    config.termination = {1, {}, {}};
    config.boundary = BoundaryPolicy::None;
    config.defaults.omega = PointMass{0.7298};
    config.defaults.phi = SumOfTwoUniforms{1.49618, 1.49618};
    config.defaults.scaling = ScalingMode::Component;
    config.defaults.combiner = CoupledClassical{};
    config.defaults.sociometry = {RingTopology{1}, true};

    const auto registry = ProblemRegistry::with_builtins();
    Swarm swarm(config, registry);
    auto reference = cpso_reference::capture(swarm);

    std::vector<std::vector<std::size_t>> neighbours(config.swarm_size);
    for (std::size_t i = 0; i < config.swarm_size; ++i)
        neighbours[i] = swarm.connectivity().informers_of(i);

    std::vector<RandomStream> streams;
    const RandomStream master(config.seed);
    for (std::size_t i = 0; i < config.swarm_size; ++i)
        streams.push_back(master.substream(1 + i));

    for (int t = 0; t < 30; ++t) {
        swarm.step();
        cpso_reference::step(reference, swarm.problem(), 0.7298, 1.49618, 1.49618, streams,
                             &neighbours);
        for (std::size_t i = 0; i < config.swarm_size; ++i) {
            CHECK(swarm.particles()[i].x_curr == reference.x[i]);
            CHECK(swarm.particles()[i].memory.position == reference.xm[i]);
        }
    }
}

TEST_CASE("evaluation failures surface with iteration and particle context")
{
    auto registry = ProblemRegistry::with_builtins();
    registry.add("fragile", [](std::size_t d) {
        return Problem{"fragile", d, SearchBounds::uniform(d, -1.0, 1.0),
                       [calls = std::make_shared<int>(0)](const std::vector<double> &) {
                           if (++*calls > 10)
                               throw std::domain_error("synthetic failure");
                           return 0.0;
                       },
                       {}, std::nullopt};
    });
    RunConfig config;
    config.problem = "fragile";
    config.dimension = 1;
    config.swarm_size = 4;
    config.seed = 6;
    config.termination = {100, {}, {}};
    try {
        run(config, registry);
        FAIL("expected the run to abort");
    } catch (const std::runtime_error &e) {
        const std::string what = e.what();
        CHECK(what.find("iteration") != std::string::npos);
        CHECK(what.find("particle") != std::string::npos);
        CHECK(what.find("synthetic failure") != std::string::npos);
    }
}

TEST_CASE("synchrony contract: frozen versus immediate memory visibility")
{
    // Minimise f(x) = x. Deterministic coefficients; the attractor is the
    // social best outright (lambda = 0). Particle 0 overshoots to -12 and
    // commits that memory; whether particle 1 sees it this iteration depends
    // on the synchrony mode.
    auto registry = registry_with_linear();
    RunConfig config;
    config.problem = "linear";
    config.dimension = 1;
    config.swarm_size = 2;
    config.seed = 1;
    config.termination = {1, {}, {}};
    config.boundary = BoundaryPolicy::None;
    config.defaults = deterministic_attributes(0.5, 1.0);

    for (auto mode : {SynchronyMode::Synchronous, SynchronyMode::Asynchronous}) {
        config.synchrony = mode;
        Swarm swarm(config, registry);
        auto &particles = swarm.particles();
        particles[0].x_curr = {-8.0};
        particles[0].x_prev = {0.0};
        particles[0].eval_curr = Evaluation(-8.0, {});
        particles[0].memory = {{-8.0}, Evaluation(-8.0, {})};
        particles[1].x_curr = {-2.0};
        particles[1].x_prev = {-2.0};
        particles[1].eval_curr = Evaluation(-2.0, {});
        particles[1].memory = {{-2.0}, Evaluation(-2.0, {})};

        swarm.step();
        // particle 0: x = -8 + 0.5(-8 - 0) + (-8 - -8) = -12, improving its memory
        CHECK(swarm.particles()[0].x_curr == std::vector<double>{-12.0});
        CHECK(swarm.particles()[0].memory.position == std::vector<double>{-12.0});
        if (mode == SynchronyMode::Synchronous) {
            // sees the frozen memories {-8, -2}: best -8
            CHECK(swarm.particles()[1].x_curr == std::vector<double>{-8.0});
        } else {
            // sees particle 0's just-committed -12
            CHECK(swarm.particles()[1].x_curr == std::vector<double>{-12.0});
        }
    }
}

TEST_CASE("single-particle deterministic run matches the closed-form trajectory")
{
    auto registry = ProblemRegistry::with_builtins();
    const auto c = coefficients_for(BehaviourKind::Monotonic, 0.9, 0.5);

    RunConfig config;
    config.problem = "sphere";
    config.dimension = 1;
    config.swarm_size = 1;
    config.seed = 5;
    config.termination = {60, {}, {}};
    config.boundary = BoundaryPolicy::None;
    config.defaults.omega = PointMass{c.omega_hat};
    config.defaults.phi = PointMass{c.phi_hat};
    config.defaults.combiner = DecoupledConvex{PointMass{1.0}, ScalingMode::Vector};

    Swarm swarm(config, registry);
    auto &ps = swarm.particles()[0];
    ps.x_curr = {5.0};
    ps.x_prev = {5.0};
    ps.eval_curr = Evaluation(25.0, {});
    ps.memory = {{1.0}, Evaluation(1.0, {})};

    const TrajectoryInitialState init(5.0, 5.0, 1.0);
    double recur_prev = 5.0, recur_curr = 5.0;
    for (std::size_t t = 2; t <= 60; ++t) {
        swarm.step();
        const double engine_x = swarm.particles()[0].x_curr[0];
        const double next = step_recurrence(recur_curr, recur_prev, c, 1.0);
        recur_prev = recur_curr;
        recur_curr = next;
        CHECK(engine_x == recur_curr);  // identical arithmetic
        const double closed = closed_form_position(c, init, t);
        CHECK(std::abs(engine_x - closed) <= 1e-9 * std::max(1.0, std::abs(engine_x)));
    }
}

TEST_CASE("stationary swarm at a common attractor never moves")
{
    auto registry = ProblemRegistry::with_builtins();
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 2;
    config.swarm_size = 4;
    config.seed = 9;
    config.termination = {30, {}, {}};

    SUBCASE("coupled classical") { config.defaults.combiner = CoupledClassical{}; }
    SUBCASE("decoupled convex")
    {
        config.defaults.phi = Uniform{0.0, 3.0};
        config.defaults.combiner = DecoupledConvex{Uniform{0.0, 1.0}, ScalingMode::Component};
    }

    Swarm swarm(config, registry);
    const std::vector<double> point{0.75, -1.25};
    const Evaluation eval = evaluate(swarm.problem(), point);
    for (auto &ps : swarm.particles()) {
        ps.x_curr = point;
        ps.x_prev = point;
        ps.eval_curr = eval;
        ps.memory = {point, eval};
    }
    for (int t = 0; t < 30; ++t) {
        swarm.step();
        for (const auto &ps : swarm.particles()) {
            CHECK(ps.x_curr == point);
            CHECK(ps.memory.position == point);
        }
    }
}

TEST_CASE("reproducibility: identical config gives identical traces, seeds matter")
{
    RunConfig config;
    config.problem = "rastrigin";
    config.dimension = 3;
    config.swarm_size = 8;
    config.seed = 123;
    config.termination = {50, {}, {}};

    const auto first = run(config);
    const auto second = run(config);
    CHECK(first.trace == second.trace);
    CHECK(first.best_position == second.best_position);

    config.seed = 124;
    const auto third = run(config);
    CHECK(first.trace != third.trace);
}

TEST_CASE("per-particle attribute overrides are honoured")
{
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 2;
    config.swarm_size = 5;
    config.seed = 2;
    config.termination = {5, {}, {}};
    config.defaults.sociometry = {RingTopology{1}, true};

    ParticleAttributes hub = config.defaults;
    hub.sociometry = {GlobalTopology{}, true};
    hub.gathering = GatheringMode::Both;
    config.overrides.emplace_back(0, hub);

    const auto registry = ProblemRegistry::with_builtins();
    Swarm swarm(config, registry);
    for (std::size_t j = 0; j < 5; ++j)
        CHECK(swarm.connectivity().informs(0, j));
    CHECK_FALSE(swarm.connectivity().informs(2, 0));
    CHECK(swarm.particles()[0].attributes.gathering == GatheringMode::Both);
    CHECK(swarm.particles()[1].attributes.gathering == GatheringMode::MemorisedOnly);
}

TEST_CASE("evaluation budget: init plus one per particle per iteration")
{
    std::size_t count = 0;
    auto registry = ProblemRegistry::with_builtins();
    registry.add("counted_sphere", [&count](std::size_t d) {
        return Problem{"counted_sphere", d, SearchBounds::uniform(d, -5.0, 5.0),
                       [&count](const std::vector<double> &x) {
                           ++count;
                           double s = 0.0;
                           for (double v : x)
                               s += v * v;
                           return s;
                       },
                       {}, std::nullopt};
    });

    RunConfig config;
    config.problem = "counted_sphere";
    config.dimension = 2;
    config.swarm_size = 6;
    config.seed = 3;
    config.termination = {11, {}, {}};
    config.init.condition = InitialCondition::TwoPositionsOneMemory;
    run(config, registry);
    CHECK(count == 3 * 6 + 6 * 11);
}

TEST_CASE("displacement cap limits per-component movement")
{
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 3;
    config.swarm_size = 6;
    config.seed = 21;
    config.termination = {40, {}, {}};
    config.displacement_cap = 0.25;

    std::vector<std::vector<double>> previous;
    const auto observer = [&previous](const std::vector<ParticleState> &particles,
                                      std::size_t iteration) {
        std::vector<std::vector<double>> now;
        for (const auto &ps : particles)
            now.push_back(ps.x_curr);
        if (iteration > 0) {
            for (std::size_t i = 0; i < now.size(); ++i)
                for (std::size_t d = 0; d < now[i].size(); ++d)
                    CHECK(std::abs(now[i][d] - previous[i][d]) <= 0.25 + 1e-12);
        }
        previous = now;
    };
    run(config, ProblemRegistry::with_builtins(), observer);
}

TEST_CASE("preserving feasibility falls back to its own memory when isolated among infeasibles")
{
    // all neighbours infeasible: the particle must keep pulling toward its
    // own (feasible) memory rather than adopting an infeasible attractor
    auto registry = ProblemRegistry::with_builtins();
    RunConfig config;
    config.problem = "constrained_sphere";
    config.dimension = 2;
    config.swarm_size = 3;
    config.seed = 4;
    config.termination = {1, {}, {}};
    config.defaults.cht = PreservingFeasibility{};
    config.defaults.sociometry = {GlobalTopology{}, false};
    config.defaults.combiner = DecoupledConvex{PointMass{0.0}, ScalingMode::Vector};
    config.defaults.omega = PointMass{0.0};
    config.defaults.phi = PointMass{1.0};

    Swarm swarm(config, registry);
    auto &particles = swarm.particles();
    const std::vector<double> good{2.0, 2.0};  // feasible
    particles[0].x_curr = good;
    particles[0].x_prev = good;
    particles[0].eval_curr = evaluate(swarm.problem(), good);
    particles[0].memory = {good, evaluate(swarm.problem(), good)};
    for (std::size_t i = 1; i < 3; ++i) {
        const std::vector<double> bad{-5.0 - double(i), -5.0};  // infeasible
        particles[i].x_curr = bad;
        particles[i].x_prev = bad;
        particles[i].eval_curr = evaluate(swarm.problem(), bad);
        particles[i].memory = {bad, evaluate(swarm.problem(), bad)};
    }
    swarm.step();
    // with phi = 1, omega = 0 and p = own memory, particle 0 stays put
    CHECK(swarm.particles()[0].x_curr == good);
    CHECK(swarm.particles()[0].memory.evaluation.feasible);
}

TEST_CASE("config validation reports field paths")
{
    RunConfig config;
    config.problem = "no_such_problem";
    config.swarm_size = 0;
    config.termination = TerminationConfig{};
    config.defaults.combiner = CoupledClassical{};
    config.defaults.phi = PointMass{1.0};  // coupled needs the two-part phi
    config.overrides.emplace_back(7, config.defaults);

    const auto issues = validate(config, ProblemRegistry::with_builtins());
    auto mentions = [&issues](const std::string &needle) {
        return std::any_of(issues.begin(), issues.end(), [&needle](const std::string &s) {
            return s.find(needle) != std::string::npos;
        });
    };
    CHECK(mentions("problem.name"));
    CHECK(mentions("swarm.size"));
    CHECK(mentions("termination"));
    CHECK(mentions("defaults"));
    CHECK(mentions("overrides[0].particle"));

    CHECK_THROWS_AS(run(config), config_error);
}

TEST_CASE("run result invariants")
{
    RunConfig config;
    config.problem = "sphere";
    config.dimension = 4;
    config.swarm_size = 12;
    config.seed = 99;
    config.termination = {80, {}, {}};
    config.output.full_dump = true;

    const auto result = run(config);
    CHECK(result.iterations == 80);
    CHECK(result.reason == TerminationReason::SearchLength);
    CHECK(result.seed == 99);
    REQUIRE(result.trace.size() == 81);  // init row plus one per iteration
    // the trace's best column is non-increasing (memories never worsen)
    for (std::size_t t = 1; t < result.trace.size(); ++t)
        CHECK(result.trace[t].best_objective <= result.trace[t - 1].best_objective);
    CHECK(result.best_evaluation.objective == result.trace.back().best_objective);
    CHECK(result.dump.size() == 81 * 12 * 4);

    SUBCASE("termination by clustering reports its reason")
    {
        config.termination = {{}, 1e-3, {}};
        config.output.full_dump = false;
        const auto r2 = run(config);
        CHECK(r2.reason == TerminationReason::Clustering);
    }
    SUBCASE("termination by convergence reports its reason")
    {
        config.termination = {{}, {}, ConvergenceCriterion{1e-14, 25}};
        config.output.full_dump = false;
        const auto r3 = run(config);
        CHECK(r3.reason == TerminationReason::Convergence);
    }
}
