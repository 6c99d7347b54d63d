#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aslsim/adder.hpp"
#include "aslsim/gates.hpp"

namespace aslsim {

/// Constants entering the switching delay/energy relations.
struct SwitchingConstants {
    double q = 0.0;     // C
    double mu_b = 0.0;  // J/T
    double ms_emu_cc = 0.0;
    double f = 0.0;     // dimensionless fitting constant
    double vdd = 0.0;   // V

    static SwitchingConstants with_f(const TechParams& tech, double f);
    /// N_s of a magnet of the given plan geometry.
    double moments(const Geometry& magnet_plan) const;
};

/// T = 2 q N_s f / I_s. I_s must be the positive magnitude of the net
/// current in the switching direction.
double switching_delay(double i_s, const SwitchingConstants& c,
                       const Geometry& magnet_plan);

/// E = V_dd * I_c * T.
double switching_energy(double i_c, double t, const SwitchingConstants& c);

/// Fixes f so the reference single-driver layout switches the unit output
/// magnet in exactly `anchor_t` seconds. Returns the constants plus the
/// anchor's charge current (its energy is an anchor-consistency check).
struct Calibration {
    SwitchingConstants consts;
    double anchor_current_spin = 0.0;
    double anchor_current_charge = 0.0;
    double anchor_energy = 0.0;
};
Calibration calibrate_f(const StarLayout& reference, const TechParams& tech,
                        double anchor_t);

/// Per-gate scheme metrics at the worst-case (slowest intended) vector.
struct GateMetrics {
    std::string gate;
    Scheme scheme = Scheme::Conventional;
    double delay = 0.0;        // s; STEM: t_init + t_eval
    double energy = 0.0;       // J; STEM: both phases
    double t_init = 0.0;       // s, STEM only
    double t_eval = 0.0;       // s, STEM only
    double i_init = 0.0;       // A, STEM only
    double i_eval = 0.0;       // A, worst-case switching current
    double unit_current = 0.0; // A, single-input contribution
    double area = 0.0;         // nm^2
};

GateMetrics conventional_metrics(const GateInstance& gate,
                                 const SwitchingConstants& c);
GateMetrics stem_metrics(const GateInstance& gate, const SwitchingConstants& c);

struct SchemeComparison {
    std::string gate;
    double delay_ratio = 0.0;   // conventional / STEM
    double energy_ratio = 0.0;
    GateMetrics conv;
    GateMetrics stem;
};

SchemeComparison compare_gate(GateKind kind, int n, const GateLayoutPair& layouts,
                              const TechParams& tech, const SwitchingConstants& c);

/// Init-magnet upsizing study rows.
struct QSweepRow {
    double q = 1.0;
    double t_init = 0.0;   // s
    double i_init = 0.0;   // A (charge)
    double e_init = 0.0;   // J
    double edp = 0.0;      // J s
};

struct QSweepResult {
    std::vector<QSweepRow> rows;
    double argmin_q = 0.0;
    bool t_init_non_increasing = false;
    bool e_init_non_decreasing = false;
};

QSweepResult q_sweep(GateKind kind, int n, const StarLayout& stem_layout,
                     const TechParams& tech, const SwitchingConstants& c,
                     const std::vector<double>& q_values);

/// Adder timing/energy under the unified two-pulse schedule.
struct AdderMetrics {
    Scheme scheme = Scheme::Stem;
    double t_init1 = 0.0, t_eval1 = 0.0, t_init2 = 0.0, t_eval2 = 0.0;  // STEM
    double stage1 = 0.0, stage2 = 0.0;                                  // conventional
    double delay = 0.0;   // s
    double energy = 0.0;  // J
    double area = 0.0;    // nm^2
};

AdderMetrics adder_metrics(const AdderInstance& adder, const SwitchingConstants& c);

}  // namespace aslsim
