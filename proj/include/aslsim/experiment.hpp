#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aslsim/gates.hpp"
#include "aslsim/llgs.hpp"
#include "aslsim/report.hpp"

namespace aslsim {

struct McSettings {
    int trials = 2000;
    double dt_ps = 1.0;
    double horizon_ps = 6000.0;
    double alpha = 0.01;
    double temperature_k = 300.0;
    double hk_am = 3.756e5;
    double torque_scale = 1.285;
    double threshold = 0.9;
    double initial_angle = -1.0;  // < 0: thermal cone

    MacrospinParams macrospin(const Geometry& magnet_plan) const;
};

struct ExperimentConfig {
    std::string experiment;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    std::string format = "csv";
    TechParams tech = TechParams::table_defaults();
    std::optional<std::string> layout_file;
    std::vector<std::string> gates = {"AND2", "AND3", "AND4", "MAJ3", "MAJ5"};
    std::vector<double> q_values = {1, 2, 4, 8, 16};
    std::string q_gate = "AND2";
    McSettings mc;
    std::string canonical;  // canonical serialization, feeds the config hash
};

/// Full schema + invariant walk; returns all diagnostics (empty means valid).
std::vector<std::string> validate_config_text(const std::string& text,
                                              const std::string& origin);
std::vector<std::string> validate_config_file(const std::string& path);

/// Parses and throws ConfigError listing every diagnostic when invalid.
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);
ExperimentConfig load_config_file(const std::string& path);

/// Parses names like AND3, MAJ5, NOR2, INV into (kind, fan-in).
std::pair<GateKind, int> parse_gate_name(const std::string& name);

Report run_experiment(const ExperimentConfig& config);

}  // namespace aslsim
