#include "aslsim/perf.hpp"

#include <algorithm>
#include <cmath>

#include "aslsim/constants.hpp"
#include "aslsim/errors.hpp"

namespace aslsim {

SwitchingConstants SwitchingConstants::with_f(const TechParams& tech, double f) {
    SwitchingConstants c;
    c.q = constants::electron_charge;
    c.mu_b = constants::bohr_magneton;
    c.ms_emu_cc = tech.ms_emu_cc;
    c.f = f;
    c.vdd = tech.vdd;
    return c;
}

double SwitchingConstants::moments(const Geometry& magnet_plan) const {
    const double ms_si = ms_emu_cc * constants::emu_cc_to_A_m;
    return ms_si * magnet_plan.volume() * constants::nm3_to_m3 / mu_b;
}

double switching_delay(double i_s, const SwitchingConstants& c,
                       const Geometry& magnet_plan) {
    if (!(i_s > 0.0))
        throw NoSwitchingDrive("switching_delay: no switching drive (I_s = " +
                               std::to_string(i_s) + " A)");
    const double ns = c.moments(magnet_plan);
    if (!(ns > 0.0)) throw ParameterError("switching constants yield N_s <= 0");
    return 2.0 * c.q * ns * c.f / i_s;
}

double switching_energy(double i_c, double t, const SwitchingConstants& c) {
    if (!(std::isfinite(i_c) && std::isfinite(t)) || i_c < 0.0 || t < 0.0)
        throw ParameterError("switching_energy: inputs must be finite and >= 0");
    return c.vdd * i_c * t;
}

Calibration calibrate_f(const StarLayout& reference, const TechParams& tech,
                        double anchor_t) {
    GateInstance buf =
        GateInstance::build(GateKind::Buf, Scheme::Conventional, 1, reference, tech);
    const PhaseResult r = buf.evaluate_conventional({1});
    if (!(r.drive > 0.0))
        throw ParameterError("calibration layout produces no forward drive");

    Calibration cal;
    cal.anchor_current_spin = r.drive;
    cal.anchor_current_charge = r.charge;
    // T = 2 q N_s f / I_s  =>  f = T I_s / (2 q N_s)
    SwitchingConstants c = SwitchingConstants::with_f(tech, 1.0);
    const double ns = c.moments(tech.magnet_plan);
    c.f = anchor_t * r.drive / (2.0 * c.q * ns);
    cal.consts = c;
    cal.anchor_energy = switching_energy(r.charge, anchor_t, c);
    return cal;
}

GateMetrics conventional_metrics(const GateInstance& gate,
                                 const SwitchingConstants& c) {
    if (gate.scheme() != Scheme::Conventional)
        throw LayoutError("conventional_metrics on a STEM gate");
    const int n = gate.fan_in();
    double worst_delay = 0.0;
    double worst_charge = 0.0;
    double worst_current = 0.0;
    for (int v = 0; v < (1 << n); ++v) {
        std::vector<int> inputs(n);
        for (int i = 0; i < n; ++i) inputs[i] = (v >> i) & 1;
        const PhaseResult r = gate.evaluate_conventional(inputs);
        const double t = switching_delay(std::abs(r.drive), c, gate.tech().magnet_plan);
        if (t > worst_delay) {
            worst_delay = t;
            worst_charge = r.charge;
            worst_current = std::abs(r.drive);
        }
    }
    GateMetrics m;
    m.gate = to_string(gate.kind()) + (n > 1 ? std::to_string(n) : "");
    m.scheme = Scheme::Conventional;
    m.delay = worst_delay;
    m.i_eval = worst_current;
    m.energy = switching_energy(worst_charge, worst_delay, c);
    m.unit_current = gate.unit_current();
    m.area = gate.footprint_area();
    return m;
}

GateMetrics stem_metrics(const GateInstance& gate, const SwitchingConstants& c) {
    if (gate.scheme() != Scheme::Stem) throw LayoutError("stem_metrics on a conventional gate");
    const int n = gate.fan_in();
    const Geometry& plan = gate.tech().magnet_plan;

    // phase 1: the init transfer (value does not change the magnitudes)
    std::vector<int> probe(n, 1);
    const PhaseResult init = gate.evaluate_phase(Phase::Init, probe);
    const double t_init = switching_delay(std::abs(init.drive), c, plan);

    // phase 2: slowest vector that must flip the initialized output
    double t_eval = 0.0, eval_charge = 0.0, eval_current = 0.0;
    for (int v = 0; v < (1 << n); ++v) {
        std::vector<int> inputs(n);
        for (int i = 0; i < n; ++i) inputs[i] = (v >> i) & 1;
        if (gate.boolean_output(inputs) == gate.init_value(inputs)) continue;
        const PhaseResult r = gate.evaluate_phase(Phase::Eval, inputs);
        const double t = switching_delay(std::abs(r.drive), c, plan);
        if (t > t_eval) {
            t_eval = t;
            eval_charge = r.charge;
            eval_current = std::abs(r.drive);
        }
    }

    GateMetrics m;
    m.gate = to_string(gate.kind()) + (n > 1 ? std::to_string(n) : "");
    m.scheme = Scheme::Stem;
    m.t_init = t_init;
    m.t_eval = t_eval;
    m.i_init = std::abs(init.drive);
    m.i_eval = eval_current;
    m.delay = t_init + t_eval;
    m.energy = switching_energy(init.charge, t_init, c) +
               switching_energy(eval_charge, t_eval, c);
    m.unit_current = gate.unit_current();
    m.area = gate.footprint_area();
    return m;
}

SchemeComparison compare_gate(GateKind kind, int n, const GateLayoutPair& layouts,
                              const TechParams& tech, const SwitchingConstants& c) {
    GateInstance conv =
        GateInstance::build(kind, Scheme::Conventional, n, layouts.conv, tech);
    GateInstance stem = GateInstance::build(kind, Scheme::Stem, n, layouts.stem, tech);
    SchemeComparison cmp;
    cmp.conv = conventional_metrics(conv, c);
    cmp.stem = stem_metrics(stem, c);
    cmp.gate = cmp.conv.gate;
    cmp.delay_ratio = cmp.conv.delay / cmp.stem.delay;
    cmp.energy_ratio = cmp.conv.energy / cmp.stem.energy;
    return cmp;
}

QSweepResult q_sweep(GateKind kind, int n, const StarLayout& stem_layout,
                     const TechParams& tech, const SwitchingConstants& c,
                     const std::vector<double>& q_values) {
    QSweepResult res;
    for (double q : q_values) {
        GateInstance g = GateInstance::build(kind, Scheme::Stem, n, stem_layout, tech, q);
        std::vector<int> probe(n, 1);
        const PhaseResult init = g.evaluate_phase(Phase::Init, probe);
        QSweepRow row;
        row.q = q;
        row.t_init = switching_delay(std::abs(init.drive), c, tech.magnet_plan);
        row.i_init = init.charge;
        row.e_init = switching_energy(init.charge, row.t_init, c);
        row.edp = row.e_init * row.t_init;
        res.rows.push_back(row);
    }
    res.t_init_non_increasing = true;
    res.e_init_non_decreasing = true;
    for (size_t i = 1; i < res.rows.size(); ++i) {
        if (res.rows[i].t_init > res.rows[i - 1].t_init)
            res.t_init_non_increasing = false;
        if (res.rows[i].e_init < res.rows[i - 1].e_init)
            res.e_init_non_decreasing = false;
    }
    const auto best = std::min_element(
        res.rows.begin(), res.rows.end(),
        [](const QSweepRow& a, const QSweepRow& b) { return a.edp < b.edp; });
    res.argmin_q = best == res.rows.end() ? 0.0 : best->q;
    return res;
}

AdderMetrics adder_metrics(const AdderInstance& adder, const SwitchingConstants& c) {
    AdderMetrics m;
    m.scheme = adder.scheme();
    m.area = adder.footprint_area();
    const Geometry& plan = adder.tech().magnet_plan;

    if (adder.scheme() == Scheme::Stem) {
        // worst cases: 1x init from a, 2x eval from agreeing b/c_in,
        // complement transfer, 3x sum evaluation
        const PhaseResult s1 = adder.step(AdderStep::InitCarry, 1, 0, 0, 0);
        const PhaseResult s2 = adder.step(AdderStep::EvalCarry, 0, 1, 1, 0);
        const PhaseResult s3 = adder.step(AdderStep::InitSum, 0, 0, 0, 1);
        const PhaseResult s4 = adder.step(AdderStep::EvalSum, 1, 1, 1, 0);
        m.t_init1 = switching_delay(std::abs(s1.drive), c, plan);
        m.t_eval1 = switching_delay(std::abs(s2.drive), c, plan);
        m.t_init2 = switching_delay(std::abs(s3.drive), c, plan);
        m.t_eval2 = switching_delay(std::abs(s4.drive), c, plan);
        const double ti = std::max(m.t_init1, m.t_init2);
        const double te = std::max(m.t_eval1, m.t_eval2);
        m.delay = 2.0 * (ti + te);
        // unified pulses keep each driver on for the shared width
        m.energy = switching_energy(s1.charge, ti, c) +
                   switching_energy(s2.charge, te, c) +
                   switching_energy(s3.charge, ti, c) +
                   switching_energy(s4.charge, te, c);
    } else {
        // both stages settle at 1x worst-case currents
        double worst1 = 0.0, worst2 = 0.0, q1 = 0.0, q2 = 0.0;
        for (int v = 0; v < 8; ++v) {
            const int a = v & 1, b = (v >> 1) & 1, cin = (v >> 2) & 1;
            const auto [cout, sout] = AdderInstance::truth(a, b, cin);
            const PhaseResult r1 = adder.stage_carry(a, b, cin);
            const PhaseResult r2 = adder.stage_sum(a, b, cin, cout);
            const double t1 = switching_delay(std::abs(r1.drive), c, plan);
            const double t2 = switching_delay(std::abs(r2.drive), c, plan);
            if (t1 > worst1) { worst1 = t1; q1 = r1.charge; }
            if (t2 > worst2) { worst2 = t2; q2 = r2.charge; }
        }
        m.stage1 = worst1;
        m.stage2 = worst2;
        m.delay = worst1 + worst2;
        m.energy = switching_energy(q1, worst1, c) + switching_energy(q2, worst2, c);
    }
    return m;
}

}  // namespace aslsim
