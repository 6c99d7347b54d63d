// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs everything from the shipped calibrated layouts.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "aslsim/adder.hpp"
#include "aslsim/constants.hpp"
#include "aslsim/experiment.hpp"
#include "aslsim/gates.hpp"
#include "aslsim/llgs.hpp"
#include "aslsim/perf.hpp"
#include "aslsim/report.hpp"
#include "aslsim/schedule.hpp"
#include "aslsim/solver.hpp"
#include "aslsim/two_phase.hpp"

using namespace aslsim;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("CRITERION %d: %s - %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++g_failures;
}

struct Setup {
    TechParams tech = TechParams::table_defaults();
    LayoutLibrary lib = LayoutLibrary::calibrated_defaults();
    Calibration cal = calibrate_f(lib.reference, tech, defaults::anchor_t_init);

    GateInstance gate(GateKind kind, Scheme scheme, int n) const {
        const GateLayoutPair p = layouts_for_gate(lib, kind, n);
        return GateInstance::build(kind, scheme, n,
                                   scheme == Scheme::Conventional ? p.conv : p.stem,
                                   tech);
    }
};

std::vector<int> bits(int v, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = (v >> i) & 1;
    return out;
}

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * std::abs(target);
}

// ---------------------------------------------------------------- criterion 1
void criterion_truth_tables(const Setup& s) {
    struct Spec {
        GateKind kind;
        int n;
    };
    const std::vector<Spec> gates = {
        {GateKind::Inv, 1},  {GateKind::Buf, 1},  {GateKind::Maj, 3},
        {GateKind::Maj, 5},  {GateKind::And, 2},  {GateKind::And, 3},
        {GateKind::And, 4},  {GateKind::Or, 2},   {GateKind::Or, 3},
        {GateKind::Or, 4},   {GateKind::Nand, 2}, {GateKind::Nand, 3},
        {GateKind::Nand, 4}, {GateKind::Nor, 2},  {GateKind::Nor, 3},
        {GateKind::Nor, 4}};
    int mismatches = 0;
    int vectors = 0;

    for (const Spec& spec : gates) {
        const GateInstance conv = s.gate(spec.kind, Scheme::Conventional, spec.n);
        const GateInstance stem = s.gate(spec.kind, Scheme::Stem, spec.n);
        LogicCircuit circuit;
        circuit.primary_count = spec.n;
        std::vector<int> wires(spec.n);
        for (int i = 0; i < spec.n; ++i) wires[i] = i;
        circuit.stages = {stage_from_gate(stem, wires, s.cal.consts)};
        const EvalWindow w = window_for_gate(stem, s.cal.consts);
        PhaseSchedule sched;
        sched.stages = {
            {0.0, circuit.stages[0].t_init, circuit.stages[0].t_init, w.t_eval}};

        for (int v = 0; v < (1 << spec.n); ++v) {
            const auto in = bits(v, spec.n);
            const int want = boolean_reference(spec.kind, in);
            ++vectors;
            const int got_conv = conv.evaluate_conventional(in).drive > 0.0 ? 1 : 0;
            if (got_conv != want) ++mismatches;
            const SimResult r = simulate_two_phase(circuit, sched, in, s.cal.consts);
            if (!r.ok() || r.output(circuit, 0) != want) ++mismatches;
        }
    }

    // five-magnet adder, both schemes
    const AdderInstance stem_adder =
        AdderInstance::build(Scheme::Stem, s.lib.adder_stem, s.lib.adder_conv, s.tech);
    const AdderInstance conv_adder = AdderInstance::build(
        Scheme::Conventional, s.lib.adder_stem, s.lib.adder_conv, s.tech);
    const AdderMetrics am = adder_metrics(stem_adder, s.cal.consts);
    const LogicCircuit sc = adder_circuit(stem_adder, s.cal.consts);
    const LogicCircuit cc = adder_circuit(conv_adder, s.cal.consts);
    const PhaseSchedule asched =
        schedule_adder(am.t_init1, am.t_eval1, am.t_init2, am.t_eval2);
    for (int v = 0; v < 8; ++v) {
        const int a = v & 1, b = (v >> 1) & 1, cin = (v >> 2) & 1;
        const auto [cout, sout] = AdderInstance::truth(a, b, cin);
        vectors += 2;
        const SimResult rs = simulate_two_phase(sc, asched, {a, b, cin}, s.cal.consts);
        if (!rs.ok() || rs.output(sc, 0) != cout || rs.output(sc, 1) != sout)
            ++mismatches;
        const SimResult rc = simulate_conventional(cc, {a, b, cin});
        if (!rc.ok() || rc.output(cc, 0) != cout || rc.output(cc, 1) != sout)
            ++mismatches;
    }
    report(1, mismatches == 0,
           std::to_string(vectors) + " vectors across both schemes, " +
               std::to_string(mismatches) + " mismatches");
}

// ---------------------------------------------------------------- criterion 2
void criterion_superposition(const Setup& s) {
    std::mt19937 rng(20260811);
    bool ok = true;
    std::string detail;

    for (int round = 0; round < 20; ++round) {
        // random connected netlist, k <= 50 nodes
        const TechParams t = s.tech;
        SpinNetlist net;
        const int k = std::uniform_int_distribution<int>(6, 50)(rng);
        for (int i = 0; i < k; ++i) net.add_node();
        std::uniform_real_distribution<double> len(20.0, 400.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        int idx = 0;
        for (int i = 1; i < k; ++i) {
            const int p = std::uniform_int_distribution<int>(0, i - 1)(rng);
            if (unit(rng) < 0.3)
                net.add_element(ElementKind::FM, t.fm, t.magnet_element(), p, i,
                                "e" + std::to_string(idx++),
                                unit(rng) < 0.5 ? 1.0 : -1.0);
            else
                net.add_element(ElementKind::NM, t.ch, t.channel_element(len(rng)), p,
                                i, "e" + std::to_string(idx++));
        }
        net.add_ground(0);
        const int nsrc = std::uniform_int_distribution<int>(2, 5)(rng);
        for (int q = 0; q < nsrc; ++q)
            net.set_source(std::uniform_int_distribution<int>(1, k - 1)(rng),
                           std::uniform_real_distribution<double>(-0.2, 0.2)(rng));

        const Solution combined = solve(net);
        std::vector<double> sum_c(net.elements.size(), 0.0),
            sum_s(net.elements.size(), 0.0);
        std::vector<double> mag_c(net.elements.size(), 1e-12),
            mag_s(net.elements.size(), 1e-12);
        for (size_t src = 0; src < net.sources.size(); ++src) {
            SpinNetlist single = net;
            for (size_t o = 0; o < single.sources.size(); ++o)
                if (o != src) single.sources[o].voltage = 0.0;
            const Solution part = solve(single);
            for (size_t e = 0; e < net.elements.size(); ++e) {
                sum_c[e] += part.branches[e].charge;
                sum_s[e] += part.branches[e].spin;
                mag_c[e] = std::max(mag_c[e], std::abs(part.branches[e].charge));
                mag_s[e] = std::max(mag_s[e], std::abs(part.branches[e].spin));
            }
        }
        double global_mag = 0.0;
        for (size_t e = 0; e < net.elements.size(); ++e)
            global_mag = std::max({global_mag, mag_c[e], mag_s[e]});
        for (size_t e = 0; e < net.elements.size(); ++e) {
            const double sc = std::max(mag_c[e], 1e-3 * global_mag);
            const double ss = std::max(mag_s[e], 1e-3 * global_mag);
            if (std::abs(sum_c[e] - combined.branches[e].charge) / sc > 1e-9 ||
                std::abs(sum_s[e] - combined.branches[e].spin) / ss > 1e-9) {
                ok = false;
                detail = "superposition defect in random netlist " + std::to_string(round);
            }
        }
    }

    // vote formula on symmetric layouts
    for (GateKind kind : {GateKind::And, GateKind::Or, GateKind::Maj}) {
        const int n = kind == GateKind::Maj ? 5 : 3;
        for (Scheme scheme : {Scheme::Conventional, Scheme::Stem}) {
            const GateInstance g = s.gate(kind, scheme, n);
            const double u = g.unit_current();
            for (int v = 0; v < (1 << n); ++v) {
                const auto in = bits(v, n);
                const PhaseResult r = scheme == Scheme::Conventional
                                          ? g.evaluate_conventional(in)
                                          : g.evaluate_phase(Phase::Eval, in);
                if (std::abs(r.drive - r.vote * u) >
                    1e-9 * std::max(u, std::abs(r.drive))) {
                    ok = false;
                    detail = "vote formula defect on " + to_string(kind) +
                             std::to_string(n);
                }
            }
        }
    }
    report(2, ok, ok ? "20 random netlists + vote formula within 1e-9" : detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion_strength_ratios(const Setup& s) {
    bool ok = true;
    std::string detail = "MAJ3 3x/1x, AND3-conv 5x/3x/1x, AND3-stem +-1/+-3 exact";

    const GateInstance maj3 = s.gate(GateKind::Maj, Scheme::Conventional, 3);
    const double m111 = maj3.evaluate_conventional({1, 1, 1}).drive;
    const double m011 = maj3.evaluate_conventional({0, 1, 1}).drive;
    if (std::abs(m111 / m011 - 3.0) > 1e-9) {
        ok = false;
        detail = "MAJ3 ratio " + std::to_string(m111 / m011);
    }

    const GateInstance and3c = s.gate(GateKind::And, Scheme::Conventional, 3);
    const double uc = and3c.unit_current();
    const int conv_votes[8] = {-5, -3, -3, -1, -3, -1, -1, 1};
    for (int v = 0; v < 8; ++v) {
        const double d = and3c.evaluate_conventional(bits(v, 3)).drive;
        if (std::abs(d / uc - conv_votes[v]) > 1e-9) {
            ok = false;
            detail = "AND3-conv vector " + std::to_string(v);
        }
    }

    const GateInstance and3s = s.gate(GateKind::And, Scheme::Stem, 3);
    const double us = and3s.unit_current();
    const int stem_votes[8] = {-3, -1, -1, 1, -1, 1, 1, 3};
    for (int v = 0; v < 8; ++v) {
        const double d = and3s.evaluate_phase(Phase::Eval, bits(v, 3)).drive;
        if (std::abs(d / us - stem_votes[v]) > 1e-9) {
            ok = false;
            detail = "AND3-stem vector " + std::to_string(v);
        }
    }
    report(3, ok, detail);
}

// ---------------------------------------------------------------- criterion 4
void criterion_calibration(const Setup& s) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    auto check = [&](const std::string& name, double value, double target) {
        if (!within(value, target, 0.10)) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + name + "=" +
                      format_number(value) + " vs " + format_number(target);
        }
    };

    struct Row {
        const char* key;
        GateKind kind;
        int n;
        double rd, re;
    };
    for (const Row r : {Row{"AND2", GateKind::And, 2, 1.6, 2.3},
                        Row{"AND3", GateKind::And, 3, 2.0, 1.9},
                        Row{"AND4", GateKind::And, 4, 3.4, 6.9},
                        Row{"MAJ5", GateKind::Maj, 5, 2.3, 2.5}}) {
        const SchemeComparison cmp =
            compare_gate(r.kind, r.n, s.lib.gate(r.key), s.tech, s.cal.consts);
        check(std::string(r.key) + " delay ratio", cmp.delay_ratio, r.rd);
        check(std::string(r.key) + " energy ratio", cmp.energy_ratio, r.re);
    }

    const AdderInstance stem =
        AdderInstance::build(Scheme::Stem, s.lib.adder_stem, s.lib.adder_conv, s.tech);
    const AdderInstance conv = AdderInstance::build(
        Scheme::Conventional, s.lib.adder_stem, s.lib.adder_conv, s.tech);
    const AdderMetrics ms = adder_metrics(stem, s.cal.consts);
    const AdderMetrics mc = adder_metrics(conv, s.cal.consts);
    check("conv adder delay ps", mc.delay / constants::ps, 2349.0);
    check("stem adder delay ps", ms.delay / constants::ps, 1590.0);
    check("conv adder energy pJ", mc.energy * 1e12, 13.6);
    check("stem adder energy pJ", ms.energy * 1e12, 6.3);
    check("conv adder area nm2", mc.area, 11250.0);
    check("stem adder area nm2", ms.area, 9450.0);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > 60.0) {
        ok = false;
        detail += "; runtime " + format_number(secs) + " s exceeds 60 s";
    }
    report(4, ok,
           ok ? "ratio and adder targets within 10% (" + format_number(secs) + " s)"
              : detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_scheduling(const Setup&) {
    bool ok = true;
    std::string detail = "chain t_init + 3 t_eval and adder 1590 ps exact";
    const StageTiming g{104e-12, 180e-12, InitDependency::Constant};
    const double chain = schedule_chain({g, g, g}).total();
    if (std::abs(chain - (104e-12 + 3 * 180e-12)) > 1e-21) {
        ok = false;
        detail = "chain latency " + format_number(chain);
    }
    const double adder =
        schedule_adder(425e-12, 370e-12, 304e-12, 356e-12).total();
    if (std::abs(adder - 1590e-12) > 1e-21) {
        ok = false;
        detail = "adder total " + format_number(adder);
    }
    report(5, ok, detail);
}

// ---------------------------------------------------------------- criterion 6
void criterion_window_soundness(const Setup& s) {
    const GateInstance g = s.gate(GateKind::And, Scheme::Stem, 3);
    const EvalWindow w = window_for_gate(g, s.cal.consts);
    LogicCircuit circuit;
    circuit.primary_count = 3;
    circuit.stages = {stage_from_gate(g, {0, 1, 2}, s.cal.consts)};
    const double t_init = circuit.stages[0].t_init;

    bool ok = true;
    std::string detail;
    // 20-point grid across [t_min, t_max)
    for (int k = 0; k < 20; ++k) {
        const double t_eval = w.t_min + (w.t_max - w.t_min) * (k / 20.0) * 0.999;
        PhaseSchedule sched;
        sched.stages = {{0.0, t_init, t_init, t_eval}};
        for (int v = 0; v < 8; ++v) {
            const SimResult r =
                simulate_two_phase(circuit, sched, bits(v, 3), s.cal.consts);
            if (!r.ok() ||
                r.output(circuit, 0) != boolean_reference(GateKind::And, bits(v, 3))) {
                ok = false;
                detail = "failure inside window at grid point " + std::to_string(k);
            }
        }
    }
    // just past t_max all three weak vectors flip and are reported
    // (their one-unit drives agree only to roundoff, so exact equality
    // would flip just the ulp-smallest of them)
    PhaseSchedule hot;
    hot.stages = {{0.0, t_init, t_init, w.t_max * (1.0 + 1e-9)}};
    for (int v = 0; v < 8; ++v) {
        const SimResult r = simulate_two_phase(circuit, hot, bits(v, 3), s.cal.consts);
        const bool should_violate = (v == 3 || v == 5 || v == 6);
        if (r.ok() == should_violate) {
            ok = false;
            detail = "missing/spurious violation on vector " + std::to_string(v);
        }
    }
    report(6, ok, ok ? "20-point grid sound; oversized pulse flagged on 011/101/110"
                     : detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion_stochastic(const Setup& s) {
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& msg) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + msg;
    };

    // (a) zero-temperature ensemble collapses to a single delay
    MacrospinParams zero;
    zero.temperature = 0.0;
    zero.initial_angle = 0.08;
    const DelayDistribution dz = monte_carlo(2e-4, zero, 64, 11);
    if (!dz.all_switched()) fail("zero-T trials did not switch");
    for (double t : dz.times())
        if (t != dz.times().front()) fail("zero-T variance nonzero");

    // (b) median non-increasing over a 3-point current ladder, N = 2000
    MacrospinParams mp;
    const double ladder[3] = {1e-4, 2e-4, 4e-4};
    double med[3], se[3];
    for (int i = 0; i < 3; ++i) {
        const DelayDistribution d = monte_carlo(ladder[i], mp, 2000, 31 + i);
        med[i] = d.percentile(50.0);
        const double iqr = d.percentile(75.0) - d.percentile(25.0);
        se[i] = 1.2533 * (iqr / 1.349) / std::sqrt(2000.0);
    }
    for (int i = 0; i + 1 < 3; ++i)
        if (!(med[i + 1] <= med[i] + 3.0 * std::hypot(se[i], se[i + 1])))
            fail("median ladder not monotone");

    // (c) and (d): drive currents from the calibrated AND3 layouts
    const GateInstance stem_gate = s.gate(GateKind::And, Scheme::Stem, 3);
    const GateInstance conv_gate = s.gate(GateKind::And, Scheme::Conventional, 3);
    const double i_init =
        std::abs(stem_gate.evaluate_phase(Phase::Init, {1, 1, 1}).drive);
    const double i_eval =
        std::abs(stem_gate.evaluate_phase(Phase::Eval, {1, 1, 1}).drive);
    const double i_conv = conventional_metrics(conv_gate, s.cal.consts).i_eval;

    const int n = 4000;
    const DelayDistribution d_init = monte_carlo(i_init, mp, n, 101);
    const DelayDistribution d_eval = monte_carlo(i_eval, mp, n, 102);
    const DelayDistribution d_conv = monte_carlo(i_conv, mp, n, 103);

    const double spread_hi = d_init.relative_spread();
    const double spread_lo = d_conv.relative_spread();
    if (!(spread_lo > spread_hi))
        fail("low-current spread " + format_number(spread_lo) +
             " not above high-current " + format_number(spread_hi));

    const double stem99 = d_init.percentile(99.0) + d_eval.percentile(99.0);
    const double conv99 = d_conv.percentile(99.0);
    if (!within(stem99 / constants::ps, 438.0, 0.15))
        fail("stem p99 sum " + format_number(stem99 / constants::ps) + " ps");
    if (!within(conv99 / constants::ps, 870.0, 0.15))
        fail("conventional p99 " + format_number(conv99 / constants::ps) + " ps");
    if (!within(conv99 / stem99, 2.0, 0.10))
        fail("p99 ratio " + format_number(conv99 / stem99));

    report(7, ok,
           ok ? "zero-T exact, ladder monotone, spreads ordered, p99 " +
                    format_number(stem99 / constants::ps) + "/" +
                    format_number(conv99 / constants::ps) + " ps"
              : detail);
}

// ---------------------------------------------------------------- criterion 8
void criterion_q_sweep(const Setup& s) {
    const QSweepResult res =
        q_sweep(GateKind::And, 2, s.lib.gate("AND2").stem, s.tech, s.cal.consts,
                {1, 2, 4, 8, 16});
    const bool ok = res.argmin_q == 1.0 && res.t_init_non_increasing;
    std::string detail = "argmin EDP at Q=" + format_number(res.argmin_q) +
                         ", t_init " +
                         (res.t_init_non_increasing ? "non-increasing" : "NOT monotone");
    report(8, ok, detail);
}

// ---------------------------------------------------------------- criterion 9
void criterion_determinism(const Setup&) {
    bool ok = true;
    std::string detail = "byte-identical reports for compare_gates and switching_mc";
    {
        ExperimentConfig cfg = parse_config_text(
            R"({"experiment":"compare_gates","gates":["AND2","MAJ3"],"seed":9})", "a");
        const std::string r1 = run_experiment(cfg).machine_json();
        const std::string r2 = run_experiment(cfg).machine_json();
        if (r1 != r2) {
            ok = false;
            detail = "compare_gates reports differ";
        }
    }
    {
        ExperimentConfig cfg = parse_config_text(
            R"({"experiment":"switching_mc","mc":{"trials":200},"seed":4242})", "b");
        const std::string r1 = run_experiment(cfg).machine_json();
        const std::string r2 = run_experiment(cfg).machine_json();
        if (r1 != r2) {
            ok = false;
            detail = "switching_mc reports differ";
        }
    }
    report(9, ok, detail);
}

}  // namespace

int main() {
    const Setup setup;
    criterion_truth_tables(setup);
    criterion_superposition(setup);
    criterion_strength_ratios(setup);
    criterion_calibration(setup);
    criterion_scheduling(setup);
    criterion_window_soundness(setup);
    criterion_stochastic(setup);
    criterion_q_sweep(setup);
    criterion_determinism(setup);
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
