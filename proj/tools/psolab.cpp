// psolab: configurable particle-swarm runs, coefficient-plane analysis and
// initialization previews from the command line.

#include "pso/config.hpp"
#include "pso/csv.hpp"
#include "pso/engine.hpp"
#include "pso/problems.hpp"
#include "pso/trajectory.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigInvalid = 2;
constexpr int kExitRuntimeFailure = 3;

// Relative output paths are resolved under $PSOLAB_OUTPUT_DIR when set.
std::string resolve_output_path(const std::string &path)
{
    const char *dir = std::getenv("PSOLAB_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute())
        return path;
    return (std::filesystem::path(dir) / path).string();
}

std::ofstream open_output(const std::string &path)
{
    std::ofstream out(resolve_output_path(path), std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

struct Range
{
    double lo = 0.0;
    double hi = 0.0;
};

Range parse_range(const std::string &text, const std::string &flag)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw pso::config_error({flag + ": expected lo:hi, got '" + text + "'"});
    try {
        const Range r{std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
        if (!(r.lo <= r.hi))
            throw pso::config_error({flag + ": lo must be <= hi"});
        return r;
    } catch (const pso::config_error &) {
        throw;
    } catch (const std::exception &) {
        throw pso::config_error({flag + ": expected lo:hi, got '" + text + "'"});
    }
}

int cmd_run(const std::string &config_path, std::optional<std::uint64_t> seed,
            std::optional<std::size_t> t_max, std::optional<std::string> trace_path,
            std::optional<std::string> dump_path)
{
    pso::RunConfig config = pso::load_config_file(config_path);
    if (seed)
        config.seed = *seed;
    if (t_max)
        config.termination.t_max = *t_max;
    if (trace_path)
        config.output.trace_path = *trace_path;
    if (dump_path) {
        config.output.dump_path = *dump_path;
        config.output.full_dump = true;
    }

    const auto registry = pso::ProblemRegistry::with_builtins();
    const pso::RunResult result = pso::run(config, registry);

    {
        auto out = open_output(config.output.trace_path.value_or("trace.csv"));
        pso::write_trace_csv(out, result.trace);
    }
    if (config.output.full_dump) {
        auto out = open_output(config.output.dump_path.value_or("dump.csv"));
        pso::write_dump_csv(out, result.dump);
    }

    std::cout << "problem:     " << config.problem << " (d=" << config.dimension << ")\n"
              << "swarm:       " << config.swarm_size << " particles, seed " << result.seed
              << "\n"
              << "iterations:  " << result.iterations << "\n"
              << "stopped by:  " << pso::to_string(result.reason) << "\n"
              << "best value:  " << pso::format_double(result.best_evaluation.objective)
              << (result.best_evaluation.feasible ? " (feasible)" : " (infeasible)") << "\n";
    std::cout << "best point: ";
    for (double v : result.best_position)
        std::cout << ' ' << pso::format_double(v);
    std::cout << '\n';
    return kExitOk;
}

int cmd_analyze(const std::string &omega_text, const std::string &phi_text, std::size_t res,
                std::optional<std::size_t> res_omega, std::optional<std::size_t> res_phi,
                const std::string &out_path)
{
    const Range omega = parse_range(omega_text, "--omega");
    const Range phi = parse_range(phi_text, "--phi");
    const auto grid = pso::dominant_root_grid(omega.lo, omega.hi, phi.lo, phi.hi,
                                              res_omega.value_or(res), res_phi.value_or(res));
    auto out = open_output(out_path);
    pso::write_grid_csv(out, grid);

    std::cout << "grid: " << grid.size() << " cells -> " << out_path << "\n"
              << "convergence region boundary: omega = 1, phi = 0, omega = phi/2 - 1\n"
              << "triangle vertices (omega, phi): (-1, 0), (1, 0), (1, 4)\n";
    return kExitOk;
}

int cmd_init_preview(const std::string &config_path, const std::string &out_path)
{
    const pso::RunConfig config = pso::load_config_file(config_path);
    const auto registry = pso::ProblemRegistry::with_builtins();
    const auto init = pso::preview_initialization(config, registry);
    auto out = open_output(out_path);
    pso::write_init_preview_csv(out, init, config.dimension);
    std::cout << "wrote " << init.size() << " particles (x1/x0/xm) to " << out_path << '\n';
    return kExitOk;
}

int cmd_list_problems()
{
    const auto registry = pso::ProblemRegistry::with_builtins();
    for (const auto &name : registry.names()) {
        const auto p = registry.make(name, 2);
        std::cout << name << ": bounds [" << pso::format_double(p.bounds.lower[0]) << ", "
                  << pso::format_double(p.bounds.upper[0]) << "]"
                  << ", constraints " << p.constraints.size();
        if (p.known_optimum)
            std::cout << ", optimum " << pso::format_double(p.known_optimum->second);
        std::cout << " (dimension configurable)\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"configurable particle swarm optimiser"};
    app.require_subcommand(1);

    // run
    auto *run_cmd = app.add_subcommand("run", "execute a configured swarm run");
    std::string run_config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> t_max;
    std::optional<std::string> trace_path, dump_path;
    run_cmd->add_option("--config", run_config, "JSON run configuration")->required();
    run_cmd->add_option("--seed", seed, "override the configured seed");
    run_cmd->add_option("--t-max", t_max, "override the search-length limit");
    run_cmd->add_option("--trace", trace_path, "trace CSV output path");
    run_cmd->add_option("--dump", dump_path, "full trajectory dump CSV path (enables dumping)");

    // analyze
    auto *analyze_cmd = app.add_subcommand("analyze", "dominant-root grid over the coefficient plane");
    std::string omega_text = "-1:2", phi_text = "0:5", grid_out = "grid.csv";
    std::size_t res = 200;
    std::optional<std::size_t> res_omega, res_phi;
    analyze_cmd->add_option("--omega", omega_text, "inertia range lo:hi");
    analyze_cmd->add_option("--phi", phi_text, "acceleration range lo:hi");
    analyze_cmd->add_option("--res", res, "grid resolution per axis");
    analyze_cmd->add_option("--res-omega", res_omega, "override omega-axis resolution");
    analyze_cmd->add_option("--res-phi", res_phi, "override phi-axis resolution");
    analyze_cmd->add_option("--out", grid_out, "grid CSV output path");

    // init-preview
    auto *preview_cmd = app.add_subcommand("init-preview", "dump the initial populations");
    std::string preview_config, preview_out = "init.csv";
    preview_cmd->add_option("--config", preview_config, "JSON run configuration")->required();
    preview_cmd->add_option("--out", preview_out, "preview CSV output path");

    auto *list_cmd = app.add_subcommand("list-problems", "list registered benchmark problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigInvalid;
    }

    try {
        if (run_cmd->parsed())
            return cmd_run(run_config, seed, t_max, trace_path, dump_path);
        if (analyze_cmd->parsed())
            return cmd_analyze(omega_text, phi_text, res, res_omega, res_phi, grid_out);
        if (preview_cmd->parsed())
            return cmd_init_preview(preview_config, preview_out);
        if (list_cmd->parsed())
            return cmd_list_problems();
    } catch (const pso::config_error &e) {
        std::cerr << e.what() << '\n';
        return kExitConfigInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntimeFailure;
    }
    return kExitOk;
}
