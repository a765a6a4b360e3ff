#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pso/config.hpp"
#include "pso/engine.hpp"

#include <cstdio>
#include <string>

using namespace pso;
using nlohmann::json;

namespace {

RunConfig sample_config()
{
    RunConfig config;
    config.problem = "rastrigin";
    config.dimension = 5;
    config.swarm_size = 20;
    config.seed = 31337;
    config.init.condition = InitialCondition::TwoPositionsOneMemory;
    config.init.relation = Perturbation{0.07};
    config.init.method = SamplingMethod::LatinHypercube;
    config.termination = {2000, 1e-12, ConvergenceCriterion{1e-9, 50}};
    config.defaults.omega = Uniform{0.4, 0.9};
    config.defaults.phi = SumOfTwoUniforms{1.3, 1.7};
    config.defaults.scaling = ScalingMode::Vector;
    config.defaults.combiner = CoupledClassical{};
    config.defaults.sociometry = {RingTopology{2}, false};
    config.defaults.cht = Penalty{{}, 2.0};
    config.defaults.gathering = GatheringMode::Both;
    config.synchrony = SynchronyMode::Asynchronous;
    config.boundary = BoundaryPolicy::Reflect;
    config.displacement_cap = 1.5;
    config.output.trace_path = "out.csv";
    config.output.full_dump = true;
    config.output.dump_path = "dump.csv";

    ParticleAttributes special = config.defaults;
    special.sociometry = {WheelTopology{3}, true};
    special.combiner = DecoupledConvex{QuantileTable{"ramp", {0.0, 1.0}, {0.0, 1.0}},
                                       ScalingMode::Component};
    special.phi = PointMass{1.494};
    config.overrides.emplace_back(4, special);
    return config;
}

} // namespace

TEST_CASE("JSON round-trip preserves the configuration exactly")
{
    const RunConfig original = sample_config();
    const json j = config_to_json(original);
    const RunConfig reparsed = config_from_json(j);
    CHECK(reparsed == original);
    // and a second hop through text
    const RunConfig reparsed2 = config_from_json(json::parse(j.dump()));
    CHECK(reparsed2 == original);
}

TEST_CASE("file round-trip")
{
    const std::string path = "/tmp/psolab_config_roundtrip.json";
    const RunConfig original = sample_config();
    save_config_file(original, path);
    const RunConfig loaded = load_config_file(path);
    CHECK(loaded == original);
    std::remove(path.c_str());
}

TEST_CASE("unknown keys are rejected with their path")
{
    json j = config_to_json(sample_config());
    j["bogus"] = 1;
    CHECK_THROWS_WITH_AS(config_from_json(j), doctest::Contains("config.bogus"), config_error);

    json j2 = config_to_json(sample_config());
    j2["swarm"]["typo_key"] = true;
    CHECK_THROWS_WITH_AS(config_from_json(j2), doctest::Contains("swarm.typo_key"),
                         config_error);

    json j3 = config_to_json(sample_config());
    j3["defaults"]["omega"]["extra"] = 0.0;
    CHECK_THROWS_WITH_AS(config_from_json(j3), doctest::Contains("defaults.omega.extra"),
                         config_error);
}

TEST_CASE("missing and mistyped fields name the offending path")
{
    json j = config_to_json(sample_config());
    j["problem"].erase("name");
    CHECK_THROWS_WITH_AS(config_from_json(j), doctest::Contains("problem.name"), config_error);

    json j2 = config_to_json(sample_config());
    j2["swarm"]["size"] = "twenty";
    CHECK_THROWS_WITH_AS(config_from_json(j2), doctest::Contains("swarm.size"), config_error);

    json j3 = config_to_json(sample_config());
    j3["termination"]["t_max"] = -5;
    CHECK_THROWS_WITH_AS(config_from_json(j3), doctest::Contains("termination.t_max"),
                         config_error);
}

TEST_CASE("partial overrides inherit the defaults")
{
    json j = config_to_json(sample_config());
    j["overrides"] = json::array({json{{"particle", 2}, {"topology", {{"kind", "global"}}}}});
    const RunConfig config = config_from_json(j);
    REQUIRE(config.overrides.size() == 1);
    CHECK(config.overrides[0].first == 2);
    const ParticleAttributes &bundle = config.overrides[0].second;
    CHECK(std::holds_alternative<GlobalTopology>(bundle.sociometry.topology));
    // untouched fields come from the defaults section
    CHECK(bundle.phi == config.defaults.phi);
    CHECK(bundle.scaling == config.defaults.scaling);
    CHECK(bundle.sociometry.include_self == config.defaults.sociometry.include_self);
}

TEST_CASE("shipped example configs parse and validate")
{
    const auto registry = ProblemRegistry::with_builtins();
    for (const char *name : {"sphere.json", "cpso_equiv.json", "lbest_ring.json"}) {
        const RunConfig config = load_config_file(std::string(PSOLAB_CONFIG_DIR) + "/" + name);
        CHECK(validate(config, registry).empty());
    }
}

TEST_CASE("unreadable file is a configuration error")
{
    CHECK_THROWS_AS(load_config_file("/no/such/file.json"), config_error);
}
