// nslab command-line driver: simulate | verify | norm.
// Exit codes: 0 success, 1 validation error, 2 runtime blow-up, 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "nslab/emit.hpp"
#include "nslab/errors.hpp"
#include "nslab/field.hpp"
#include "nslab/field_io.hpp"
#include "nslab/inequality_lab.hpp"
#include "nslab/mixed_norm.hpp"
#include "nslab/monitor.hpp"
#include "nslab/run_config.hpp"
#include "nslab/solver.hpp"

namespace {

using namespace nslab;

// Flag spelling for each manifest key (keys use '_', flags use '-').
std::string flag_for(const std::string& key) {
    std::string f = "--" + key;
    for (auto& c : f)
        if (c == '_') c = '-';
    return f;
}

struct SubcommandOptions {
    std::map<std::string, std::string> values;  // raw flag values, set keys only
    std::string config_path;
};

void add_options(CLI::App* cmd, const std::string& subcommand, SubcommandOptions& opts,
                 std::map<std::string, std::string>& storage) {
    for (const auto& [key, def] : subcommand_defaults(subcommand)) {
        auto* opt = cmd->add_option(flag_for(key), storage[key]);
        opt->description("default: " + (def.empty() ? std::string("(none)") : def));
    }
    cmd->add_option("--config", opts.config_path,
                    "key=value config file; flags override file values");
}

std::map<std::string, std::string> set_values(const CLI::App* cmd, const std::string& subcommand,
                                              const std::map<std::string, std::string>& storage) {
    std::map<std::string, std::string> out;
    for (const auto& [key, def] : subcommand_defaults(subcommand)) {
        (void)def;
        if (cmd->count(flag_for(key)) > 0) out.emplace(key, storage.at(key));
    }
    return out;
}

SolverConfig solver_config_from(const RunManifest& m) {
    SolverConfig cfg;
    cfg.grid_n = m.get_int("grid");
    cfg.dt = m.get_double("dt");
    cfg.t_end = m.get_double("t_end");
    cfg.nu = m.get_double("nu");
    cfg.init = init_kind_from_string(m.get("init"));
    cfg.seed = m.get_u64("seed");
    cfg.amplitude = m.get_double("amplitude");
    cfg.slope = m.get_double("slope");
    cfg.dealias = m.get_on_off("dealias");
    cfg.stride = m.get_int("stride");
    cfg.field_file = m.get("field_file");
    return cfg;
}

int cmd_simulate(const RunManifest& m) {
    const SolverConfig cfg = solver_config_from(m);
    const MixedExponents exps(parse_exponent(m.get("p")), parse_exponent(m.get("q")),
                              parse_exponent(m.get("r")));
    Monitor monitor(exps, cfg.nu);
    const std::string save_dir = m.get("save_fields");
    if (!save_dir.empty()) std::filesystem::create_directories(save_dir);

    std::string status = "completed";
    int code = 0;
    try {
        run(cfg, [&](const SolverState& s) {
            monitor.observe(s);
            if (!save_dir.empty()) {
                char name[32];
                std::snprintf(name, sizeof name, "fields_%06ld.raw", s.step_index);
                write_vector_field(save_dir + "/" + name, s.u);
            }
        });
    } catch (const blow_up_error& e) {
        status = "blow-up at step " + std::to_string(e.step_index);
        code = 2;
    }
    const EmitPaths paths = emit_run(m, monitor, status);
    std::cerr << "wrote " << paths.csv << ", " << paths.summary_json << ", " << paths.manifest
              << " (" << status << ")\n";
    return code;
}

int cmd_verify(const RunManifest& m) {
    TestFunctionSpec spec;
    spec.kind = bump_kind_from_string(m.get("family"));
    spec.support_radius = m.get_double("radius");
    spec.seed = m.get_u64("seed");
    spec.amplitude = m.get_double("amplitude");

    std::vector<int> grids;
    {
        std::stringstream ss(m.get("grid"));
        std::string item;
        while (std::getline(ss, item, ',')) grids.push_back(std::stoi(item));
    }
    const int samples = m.get_int("samples");

    RatioReport report;
    if (m.get("suite") == "lemma1") {
        report = run_family_lemma1(spec, parse_exponent(m.get("p")),
                                   parse_exponent(m.get("q")), parse_exponent(m.get("r")),
                                   samples, grids);
    } else {
        const Lemma2Exponents exps(m.get_double("theta"), m.get_double("lambda"),
                                   m.get_double("kappa"));
        report = run_family_lemma2(spec, exps, samples, grids);
    }
    const EmitPaths paths = emit_report(m, report);
    std::cerr << "wrote " << paths.csv << ", " << paths.summary_json << ", " << paths.manifest
              << " (sup " << fmt_sci(report.sup) << ", drift " << fmt_sci(report.drift)
              << ")\n";
    return 0;
}

int cmd_norm(const RunManifest& m) {
    const std::string path = m.get("input");
    ScalarField f;
    if (field_components(path) == 1) {
        f = read_scalar_field(path);
    } else {
        f = magnitude(read_vector_field(path));  // pointwise Euclidean magnitude
    }
    const double value = mixed_norm(f, parse_exponent(m.get("p")), parse_exponent(m.get("q")),
                                    parse_exponent(m.get("r")));
    std::printf("%.16e\n", value);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nslab: pseudo-spectral Navier-Stokes box runs with anisotropic-norm "
                 "monitoring, plus an inequality verification harness"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "advance the equations and monitor norms");
    auto* ver = app.add_subcommand("verify", "sample inequality ratios on test functions");
    auto* nrm = app.add_subcommand("norm", "anisotropic norm of a stored field");

    SubcommandOptions sim_opts, ver_opts, nrm_opts;
    std::map<std::string, std::string> sim_store, ver_store, nrm_store;
    add_options(sim, "simulate", sim_opts, sim_store);
    add_options(ver, "verify", ver_opts, ver_store);
    add_options(nrm, "norm", nrm_opts, nrm_store);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) {
            const RunManifest m = resolve_manifest(
                "simulate", set_values(sim, "simulate", sim_store), sim_opts.config_path);
            return cmd_simulate(m);
        }
        if (ver->parsed()) {
            const RunManifest m = resolve_manifest(
                "verify", set_values(ver, "verify", ver_store), ver_opts.config_path);
            return cmd_verify(m);
        }
        const RunManifest m =
            resolve_manifest("norm", set_values(nrm, "norm", nrm_store), nrm_opts.config_path);
        return cmd_norm(m);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
