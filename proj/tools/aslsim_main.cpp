#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aslsim/errors.hpp"
#include "aslsim/experiment.hpp"
#include "aslsim/netlist_io.hpp"
#include "aslsim/report.hpp"
#include "aslsim/solver.hpp"

namespace {

// exit codes: 0 ok, 2 validation, 3 physics/solver, 4 protocol violation
constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kPhysics = 3;
constexpr int kProtocol = 4;

int run_cmd(const std::string& config_path, std::uint64_t* seed_override,
            std::string* out_dir_override, std::string* format_override) {
    aslsim::ExperimentConfig cfg = aslsim::load_config_file(config_path);
    if (seed_override) cfg.seed = *seed_override;
    if (out_dir_override) cfg.out_dir = *out_dir_override;
    if (format_override) cfg.format = *format_override;

    const aslsim::Report rep = aslsim::run_experiment(cfg);
    aslsim::write_report(rep, cfg.out_dir, cfg.format);
    std::cout << rep.human_text();
    std::cout << "wrote " << cfg.out_dir << "/report.json\n";
    return kOk;
}

int validate_cmd(const std::string& config_path) {
    const auto diags = aslsim::validate_config_file(config_path);
    if (diags.empty()) {
        std::cout << config_path << ": ok\n";
        return kOk;
    }
    for (const auto& d : diags) std::cout << d << "\n";
    std::cout << diags.size() << " problem(s)\n";
    return kValidation;
}

int solve_cmd(const std::string& netlist_path) {
    const aslsim::LoadedNetlist loaded = aslsim::load_netlist_file(netlist_path);
    const aslsim::Solution sol = aslsim::solve(loaded.netlist);
    std::printf("%-16s %16s %16s\n", "node", "V_c (V)", "V_s (V)");
    for (int n = 0; n < loaded.netlist.node_count; ++n)
        std::printf("%-16s %16.9e %16.9e\n",
                    loaded.netlist.describe_node(n).c_str(), sol.charge_at(n),
                    sol.spin_at(n));
    std::printf("\n%-16s %16s %16s\n", "element", "I_c (A)", "I_s (A)");
    for (size_t i = 0; i < loaded.netlist.elements.size(); ++i)
        std::printf("%-16s %16.9e %16.9e\n", loaded.netlist.elements[i].name.c_str(),
                    sol.branches[i].charge, sol.branches[i].spin);
    std::printf("\nresidual %.3e, max charge defect %.3e A\n", sol.residual,
                aslsim::max_charge_defect(loaded.netlist, sol));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aslsim - all-spin-logic circuit and timing simulator"};
    app.require_subcommand(1);

    std::string config_path, netlist_path;
    std::uint64_t seed = 0;
    std::string out_dir, format;
    bool have_seed = false;

    CLI::App* run = app.add_subcommand("run", "run an experiment config");
    run->add_option("config", config_path, "experiment config (JSON)")->required();
    CLI::Option* seed_opt = run->add_option("--seed", seed, "override the config seed");
    CLI::Option* dir_opt =
        run->add_option("--out-dir", out_dir, "override the output directory");
    CLI::Option* fmt_opt =
        run->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* validate = app.add_subcommand("validate", "check a config, run nothing");
    validate->add_option("config", config_path, "experiment config (JSON)")->required();

    CLI::App* solve = app.add_subcommand("solve", "solve a netlist file and print currents");
    solve->add_option("netlist", netlist_path, "netlist file")->required();

    CLI11_PARSE(app, argc, argv);
    have_seed = seed_opt->count() > 0;

    try {
        if (run->parsed())
            return run_cmd(config_path, have_seed ? &seed : nullptr,
                           dir_opt->count() ? &out_dir : nullptr,
                           fmt_opt->count() ? &format : nullptr);
        if (validate->parsed()) return validate_cmd(config_path);
        if (solve->parsed()) return solve_cmd(netlist_path);
    } catch (const aslsim::ProtocolViolation& e) {
        std::cerr << "protocol violation: " << e.what() << "\n";
        return kProtocol;
    } catch (const aslsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kValidation;
    } catch (const aslsim::LayoutError& e) {
        std::cerr << "layout error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPhysics;
    }
    return kOk;
}
