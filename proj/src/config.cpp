#include "pso/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace pso {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &message)
{
    throw config_error({path + ": " + message});
}

void reject_unknown_keys(const json &j, const std::string &path,
                         std::initializer_list<const char *> allowed)
{
    if (!j.is_object())
        fail(path, "expected an object");
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto &[key, value] : j.items())
        if (!known.count(key))
            fail(path + "." + key, "unknown key");
}

const json &require(const json &j, const std::string &path, const char *key)
{
    if (!j.contains(key))
        fail(path + "." + key, "missing required field");
    return j.at(key);
}

double as_double(const json &j, const std::string &path)
{
    if (!j.is_number())
        fail(path, "expected a number");
    return j.get<double>();
}

std::size_t as_size(const json &j, const std::string &path)
{
    if (j.is_number_unsigned())
        return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<long long>() >= 0)
        return static_cast<std::size_t>(j.get<long long>());
    fail(path, "expected a nonnegative integer");
}

bool as_bool(const json &j, const std::string &path)
{
    if (!j.is_boolean())
        fail(path, "expected a boolean");
    return j.get<bool>();
}

std::string as_string(const json &j, const std::string &path)
{
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

// ---- distributions ----

json distribution_to_json(const CoefficientDistribution &dist)
{
    return std::visit(
        [](const auto &d) -> json {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointMass>)
                return {{"kind", "point"}, {"value", d.value}};
            else if constexpr (std::is_same_v<T, Uniform>)
                return {{"kind", "uniform"}, {"lo", d.lo}, {"hi", d.hi}};
            else if constexpr (std::is_same_v<T, SumOfTwoUniforms>)
                return {{"kind", "sum2u"}, {"iw", d.iw_max}, {"sw", d.sw_max}};
            else
                return {{"kind", "quantile"}, {"name", d.name}, {"u", d.u}, {"q", d.q}};
        },
        dist);
}

std::vector<double> as_double_array(const json &j, const std::string &path)
{
    if (!j.is_array())
        fail(path, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_double(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

CoefficientDistribution distribution_from_json(const json &j, const std::string &path)
{
    const std::string kind = as_string(require(j, path, "kind"), path + ".kind");
    if (kind == "point") {
        reject_unknown_keys(j, path, {"kind", "value"});
        return PointMass{as_double(require(j, path, "value"), path + ".value")};
    }
    if (kind == "uniform") {
        reject_unknown_keys(j, path, {"kind", "lo", "hi"});
        return Uniform{as_double(require(j, path, "lo"), path + ".lo"),
                       as_double(require(j, path, "hi"), path + ".hi")};
    }
    if (kind == "sum2u") {
        reject_unknown_keys(j, path, {"kind", "iw", "sw"});
        return SumOfTwoUniforms{as_double(require(j, path, "iw"), path + ".iw"),
                                as_double(require(j, path, "sw"), path + ".sw")};
    }
    if (kind == "quantile") {
        reject_unknown_keys(j, path, {"kind", "name", "u", "q"});
        return QuantileTable{as_string(require(j, path, "name"), path + ".name"),
                             as_double_array(require(j, path, "u"), path + ".u"),
                             as_double_array(require(j, path, "q"), path + ".q")};
    }
    fail(path + ".kind", "unknown distribution kind '" + kind + "'");
}

// ---- enums ----

const char *to_string(ScalingMode mode)
{
    return mode == ScalingMode::Vector ? "vector" : "component";
}

ScalingMode scaling_from_string(const std::string &s, const std::string &path)
{
    if (s == "vector")
        return ScalingMode::Vector;
    if (s == "component")
        return ScalingMode::Component;
    fail(path, "expected 'vector' or 'component'");
}

const char *to_string(GatheringMode mode)
{
    switch (mode) {
    case GatheringMode::MemorisedOnly: return "memorised";
    case GatheringMode::CurrentOnly:   return "current";
    case GatheringMode::Both:          return "both";
    }
    return "memorised";
}

GatheringMode gathering_from_string(const std::string &s, const std::string &path)
{
    if (s == "memorised")
        return GatheringMode::MemorisedOnly;
    if (s == "current")
        return GatheringMode::CurrentOnly;
    if (s == "both")
        return GatheringMode::Both;
    fail(path, "expected 'memorised', 'current' or 'both'");
}

// ---- combiner / topology / cht ----

json combiner_to_json(const AttractorCombiner &combiner)
{
    if (std::holds_alternative<CoupledClassical>(combiner))
        return {{"mode", "coupled"}};
    const auto &dec = std::get<DecoupledConvex>(combiner);
    return {{"mode", "decoupled"},
            {"lambda", distribution_to_json(dec.lambda_distribution)},
            {"lambda_scaling", to_string(dec.lambda_scaling)}};
}

AttractorCombiner combiner_from_json(const json &j, const std::string &path)
{
    const std::string mode = as_string(require(j, path, "mode"), path + ".mode");
    if (mode == "coupled") {
        reject_unknown_keys(j, path, {"mode"});
        return CoupledClassical{};
    }
    if (mode == "decoupled") {
        reject_unknown_keys(j, path, {"mode", "lambda", "lambda_scaling"});
        DecoupledConvex dec;
        if (j.contains("lambda"))
            dec.lambda_distribution = distribution_from_json(j.at("lambda"), path + ".lambda");
        if (j.contains("lambda_scaling"))
            dec.lambda_scaling = scaling_from_string(
                as_string(j.at("lambda_scaling"), path + ".lambda_scaling"),
                path + ".lambda_scaling");
        return dec;
    }
    fail(path + ".mode", "expected 'coupled' or 'decoupled'");
}

json topology_to_json(const LocalSociometrySpec &spec)
{
    return std::visit(
        [](const auto &topo) -> json {
            using T = std::decay_t<decltype(topo)>;
            if constexpr (std::is_same_v<T, GlobalTopology>)
                return {{"kind", "global"}};
            else if constexpr (std::is_same_v<T, RingTopology>)
                return {{"kind", "ring"}, {"k", topo.k_each_side}};
            else if constexpr (std::is_same_v<T, ForwardTopology>)
                return {{"kind", "forward"}, {"k", topo.k_ahead}};
            else
                return {{"kind", "wheel"}, {"hub", topo.hub}};
        },
        spec.topology);
}

NeighbourhoodTopology topology_from_json(const json &j, const std::string &path)
{
    const std::string kind = as_string(require(j, path, "kind"), path + ".kind");
    if (kind == "global") {
        reject_unknown_keys(j, path, {"kind"});
        return GlobalTopology{};
    }
    if (kind == "ring") {
        reject_unknown_keys(j, path, {"kind", "k"});
        return RingTopology{as_size(require(j, path, "k"), path + ".k")};
    }
    if (kind == "forward") {
        reject_unknown_keys(j, path, {"kind", "k"});
        return ForwardTopology{as_size(require(j, path, "k"), path + ".k")};
    }
    if (kind == "wheel") {
        reject_unknown_keys(j, path, {"kind", "hub"});
        return WheelTopology{as_size(require(j, path, "hub"), path + ".hub")};
    }
    fail(path + ".kind", "unknown topology kind '" + kind + "'");
}

json cht_to_json(const ConstraintHandler &cht)
{
    return std::visit(
        [](const auto &handler) -> json {
            using T = std::decay_t<decltype(handler)>;
            if constexpr (std::is_same_v<T, PreservingFeasibility>)
                return {{"kind", "preserving_feasibility"}};
            else if constexpr (std::is_same_v<T, Penalty>)
                return {{"kind", "penalty"},
                        {"coefficients", handler.coefficients},
                        {"exponent", handler.exponent}};
            else
                return {{"kind", "priority_rules"}};
        },
        cht);
}

ConstraintHandler cht_from_json(const json &j, const std::string &path)
{
    const std::string kind = as_string(require(j, path, "kind"), path + ".kind");
    if (kind == "preserving_feasibility") {
        reject_unknown_keys(j, path, {"kind"});
        return PreservingFeasibility{};
    }
    if (kind == "priority_rules") {
        reject_unknown_keys(j, path, {"kind"});
        return PriorityRules{};
    }
    if (kind == "penalty") {
        reject_unknown_keys(j, path, {"kind", "coefficients", "exponent"});
        Penalty pen;
        pen.coefficients = as_double_array(require(j, path, "coefficients"),
                                           path + ".coefficients");
        if (j.contains("exponent"))
            pen.exponent = as_double(j.at("exponent"), path + ".exponent");
        return pen;
    }
    fail(path + ".kind", "unknown constraint handler kind '" + kind + "'");
}

// ---- particle attributes ----

json attributes_to_json(const ParticleAttributes &a)
{
    json j;
    j["omega"] = distribution_to_json(a.omega);
    j["phi"] = distribution_to_json(a.phi);
    j["scaling"] = to_string(a.scaling);
    j["combiner"] = combiner_to_json(a.combiner);
    j["topology"] = topology_to_json(a.sociometry);
    j["include_self"] = a.sociometry.include_self;
    j["cht"] = cht_to_json(a.cht);
    j["gathering"] = to_string(a.gathering);
    return j;
}

ParticleAttributes attributes_from_json(const json &j, const std::string &path,
                                        const ParticleAttributes &base,
                                        std::initializer_list<const char *> extra_keys = {})
{
    std::vector<const char *> allowed = {"omega",    "phi",          "scaling", "combiner",
                                         "topology", "include_self", "cht",     "gathering"};
    allowed.insert(allowed.end(), extra_keys.begin(), extra_keys.end());
    if (!j.is_object())
        fail(path, "expected an object");
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto &[key, value] : j.items())
        if (!known.count(key))
            fail(path + "." + key, "unknown key");

    ParticleAttributes a = base;
    if (j.contains("omega"))
        a.omega = distribution_from_json(j.at("omega"), path + ".omega");
    if (j.contains("phi"))
        a.phi = distribution_from_json(j.at("phi"), path + ".phi");
    if (j.contains("scaling"))
        a.scaling = scaling_from_string(as_string(j.at("scaling"), path + ".scaling"),
                                        path + ".scaling");
    if (j.contains("combiner"))
        a.combiner = combiner_from_json(j.at("combiner"), path + ".combiner");
    if (j.contains("topology"))
        a.sociometry.topology = topology_from_json(j.at("topology"), path + ".topology");
    if (j.contains("include_self"))
        a.sociometry.include_self = as_bool(j.at("include_self"), path + ".include_self");
    if (j.contains("cht"))
        a.cht = cht_from_json(j.at("cht"), path + ".cht");
    if (j.contains("gathering"))
        a.gathering = gathering_from_string(as_string(j.at("gathering"), path + ".gathering"),
                                            path + ".gathering");
    return a;
}

// ---- init / termination / enums ----

const char *to_string(InitialCondition c)
{
    switch (c) {
    case InitialCondition::Stagnation:            return "stagnation";
    case InitialCondition::TwoPositions:          return "two_positions";
    case InitialCondition::OnePositionOneMemory:  return "one_position_one_memory";
    case InitialCondition::TwoPositionsOneMemory: return "two_positions_one_memory";
    }
    return "stagnation";
}

InitialCondition condition_from_string(const std::string &s, const std::string &path)
{
    if (s == "stagnation")
        return InitialCondition::Stagnation;
    if (s == "two_positions")
        return InitialCondition::TwoPositions;
    if (s == "one_position_one_memory")
        return InitialCondition::OnePositionOneMemory;
    if (s == "two_positions_one_memory")
        return InitialCondition::TwoPositionsOneMemory;
    fail(path, "unknown initial condition '" + s + "'");
}

json relation_to_json(const SampleRelation &relation)
{
    return std::visit(
        [](const auto &rel) -> json {
            using T = std::decay_t<decltype(rel)>;
            if constexpr (std::is_same_v<T, Perturbation>)
                return {{"kind", "perturbation"}, {"radius_fraction", rel.radius_fraction}};
            else if constexpr (std::is_same_v<T, Independent>)
                return {{"kind", "independent"}};
            else
                return {{"kind", "simultaneous"}};
        },
        relation);
}

SampleRelation relation_from_json(const json &j, const std::string &path)
{
    const std::string kind = as_string(require(j, path, "kind"), path + ".kind");
    if (kind == "perturbation") {
        reject_unknown_keys(j, path, {"kind", "radius_fraction"});
        Perturbation pert;
        if (j.contains("radius_fraction"))
            pert.radius_fraction = as_double(j.at("radius_fraction"),
                                             path + ".radius_fraction");
        return pert;
    }
    if (kind == "independent") {
        reject_unknown_keys(j, path, {"kind"});
        return Independent{};
    }
    if (kind == "simultaneous") {
        reject_unknown_keys(j, path, {"kind"});
        return Simultaneous{};
    }
    fail(path + ".kind", "unknown sample relation '" + kind + "'");
}

const char *to_string(SamplingMethod m)
{
    return m == SamplingMethod::UniformRandom ? "uniform" : "latin_hypercube";
}

SamplingMethod sampling_from_string(const std::string &s, const std::string &path)
{
    if (s == "uniform")
        return SamplingMethod::UniformRandom;
    if (s == "latin_hypercube")
        return SamplingMethod::LatinHypercube;
    fail(path, "expected 'uniform' or 'latin_hypercube'");
}

} // namespace

json config_to_json(const RunConfig &config)
{
    json j;
    j["problem"] = {{"name", config.problem}, {"dimension", config.dimension}};

    json swarm;
    swarm["size"] = config.swarm_size;
    swarm["seed"] = config.seed;
    swarm["synchrony"] =
        config.synchrony == SynchronyMode::Synchronous ? "synchronous" : "asynchronous";
    swarm["boundary_policy"] = config.boundary == BoundaryPolicy::None    ? "none"
                               : config.boundary == BoundaryPolicy::Clamp ? "clamp"
                                                                          : "reflect";
    if (config.displacement_cap)
        swarm["displacement_cap"] = *config.displacement_cap;
    j["swarm"] = swarm;

    j["init"] = {{"condition", to_string(config.init.condition)},
                 {"relation", relation_to_json(config.init.relation)},
                 {"sampling", to_string(config.init.method)}};

    json term;
    if (config.termination.t_max)
        term["t_max"] = *config.termination.t_max;
    if (config.termination.diversity_threshold)
        term["diversity_threshold"] = *config.termination.diversity_threshold;
    if (config.termination.convergence)
        term["convergence"] = {{"epsilon", config.termination.convergence->epsilon},
                               {"window", config.termination.convergence->window}};
    j["termination"] = term;

    j["defaults"] = attributes_to_json(config.defaults);

    if (!config.overrides.empty()) {
        json overrides = json::array();
        for (const auto &[index, bundle] : config.overrides) {
            json entry = attributes_to_json(bundle);
            entry["particle"] = index;
            overrides.push_back(entry);
        }
        j["overrides"] = overrides;
    }

    json output;
    if (config.output.trace_path)
        output["trace"] = *config.output.trace_path;
    output["full_dump"] = config.output.full_dump;
    if (config.output.dump_path)
        output["dump"] = *config.output.dump_path;
    j["output"] = output;
    return j;
}

RunConfig config_from_json(const json &j)
{
    reject_unknown_keys(j, "config",
                        {"problem", "swarm", "init", "termination", "defaults", "overrides",
                         "output"});
    RunConfig config;

    const json &problem = require(j, "config", "problem");
    reject_unknown_keys(problem, "problem", {"name", "dimension"});
    config.problem = as_string(require(problem, "problem", "name"), "problem.name");
    config.dimension = as_size(require(problem, "problem", "dimension"), "problem.dimension");

    const json &swarm = require(j, "config", "swarm");
    reject_unknown_keys(swarm, "swarm",
                        {"size", "seed", "synchrony", "boundary_policy", "displacement_cap"});
    config.swarm_size = as_size(require(swarm, "swarm", "size"), "swarm.size");
    if (swarm.contains("seed"))
        config.seed = as_size(swarm.at("seed"), "swarm.seed");
    if (swarm.contains("synchrony")) {
        const std::string s = as_string(swarm.at("synchrony"), "swarm.synchrony");
        if (s == "synchronous")
            config.synchrony = SynchronyMode::Synchronous;
        else if (s == "asynchronous")
            config.synchrony = SynchronyMode::Asynchronous;
        else
            fail("swarm.synchrony", "expected 'synchronous' or 'asynchronous'");
    }
    if (swarm.contains("boundary_policy")) {
        const std::string s = as_string(swarm.at("boundary_policy"), "swarm.boundary_policy");
        if (s == "none")
            config.boundary = BoundaryPolicy::None;
        else if (s == "clamp")
            config.boundary = BoundaryPolicy::Clamp;
        else if (s == "reflect")
            config.boundary = BoundaryPolicy::Reflect;
        else
            fail("swarm.boundary_policy", "expected 'none', 'clamp' or 'reflect'");
    }
    if (swarm.contains("displacement_cap"))
        config.displacement_cap = as_double(swarm.at("displacement_cap"),
                                            "swarm.displacement_cap");

    if (j.contains("init")) {
        const json &init = j.at("init");
        reject_unknown_keys(init, "init", {"condition", "relation", "sampling"});
        if (init.contains("condition"))
            config.init.condition = condition_from_string(
                as_string(init.at("condition"), "init.condition"), "init.condition");
        if (init.contains("relation"))
            config.init.relation = relation_from_json(init.at("relation"), "init.relation");
        if (init.contains("sampling"))
            config.init.method = sampling_from_string(
                as_string(init.at("sampling"), "init.sampling"), "init.sampling");
    }

    const json &term = require(j, "config", "termination");
    reject_unknown_keys(term, "termination", {"t_max", "diversity_threshold", "convergence"});
    config.termination = {};
    if (term.contains("t_max"))
        config.termination.t_max = as_size(term.at("t_max"), "termination.t_max");
    if (term.contains("diversity_threshold"))
        config.termination.diversity_threshold =
            as_double(term.at("diversity_threshold"), "termination.diversity_threshold");
    if (term.contains("convergence")) {
        const json &conv = term.at("convergence");
        reject_unknown_keys(conv, "termination.convergence", {"epsilon", "window"});
        config.termination.convergence = ConvergenceCriterion{
            as_double(require(conv, "termination.convergence", "epsilon"),
                      "termination.convergence.epsilon"),
            as_size(require(conv, "termination.convergence", "window"),
                    "termination.convergence.window")};
    }

    if (j.contains("defaults"))
        config.defaults = attributes_from_json(j.at("defaults"), "defaults", ParticleAttributes{});

    if (j.contains("overrides")) {
        const json &overrides = j.at("overrides");
        if (!overrides.is_array())
            fail("overrides", "expected an array");
        for (std::size_t k = 0; k < overrides.size(); ++k) {
            const std::string path = "overrides[" + std::to_string(k) + "]";
            const json &entry = overrides[k];
            const std::size_t index =
                as_size(require(entry, path, "particle"), path + ".particle");
            const ParticleAttributes bundle =
                attributes_from_json(entry, path, config.defaults, {"particle"});
            config.overrides.emplace_back(index, bundle);
        }
    }

    if (j.contains("output")) {
        const json &output = j.at("output");
        reject_unknown_keys(output, "output", {"trace", "full_dump", "dump"});
        if (output.contains("trace"))
            config.output.trace_path = as_string(output.at("trace"), "output.trace");
        if (output.contains("full_dump"))
            config.output.full_dump = as_bool(output.at("full_dump"), "output.full_dump");
        if (output.contains("dump"))
            config.output.dump_path = as_string(output.at("dump"), "output.dump");
    }
    return config;
}

RunConfig load_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error({"config file '" + path + "' is not readable"});
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw config_error({"config file '" + path + "': " + e.what()});
    }
    return config_from_json(j);
}

void save_config_file(const RunConfig &config, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write config file '" + path + "'");
    out << config_to_json(config).dump(2) << '\n';
}

} // namespace pso
