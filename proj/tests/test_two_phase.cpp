#include <doctest.h>

#include "aslsim/constants.hpp"
#include "aslsim/errors.hpp"
#include "aslsim/two_phase.hpp"
#include "helpers.hpp"

using namespace aslsim;

namespace {

struct Fixture {
    TechParams tech = testutil::tech();
    LayoutLibrary lib = LayoutLibrary::calibrated_defaults();
    Calibration cal = calibrate_f(lib.reference, tech, defaults::anchor_t_init);

    GateInstance stem(GateKind kind, int n) const {
        const std::string key =
            (kind == GateKind::Maj ? "MAJ" : "AND") + std::to_string(n);
        return GateInstance::build(kind, Scheme::Stem, n, lib.gate(key).stem, tech);
    }
};

std::vector<int> bits(int v, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = (v >> i) & 1;
    return out;
}

}  // namespace

TEST_CASE("AND3 two-phase rows: weak one-unit currents cannot flip the output") {
    const Fixture fx;
    const GateInstance g = fx.stem(GateKind::And, 3);
    LogicCircuit c;
    c.primary_count = 3;
    c.stages = {stage_from_gate(g, {0, 1, 2}, fx.cal.consts)};
    const EvalWindow w = window_for_gate(g, fx.cal.consts);
    PhaseSchedule sched;
    sched.stages = {{0.0, c.stages[0].t_init, c.stages[0].t_init, w.t_eval}};

    const SimResult r011 = simulate_two_phase(c, sched, {0, 1, 1}, fx.cal.consts);
    CHECK(r011.ok());
    CHECK(r011.output(c, 0) == 0);
    const SimResult r111 = simulate_two_phase(c, sched, {1, 1, 1}, fx.cal.consts);
    CHECK(r111.ok());
    CHECK(r111.output(c, 0) == 1);
}

TEST_CASE("an oversized eval pulse is reported as a protocol violation") {
    const Fixture fx;
    const GateInstance g = fx.stem(GateKind::And, 3);
    LogicCircuit c;
    c.primary_count = 3;
    c.stages = {stage_from_gate(g, {0, 1, 2}, fx.cal.consts)};
    const EvalWindow w = window_for_gate(g, fx.cal.consts);
    PhaseSchedule sched;
    sched.stages = {{0.0, c.stages[0].t_init, c.stages[0].t_init, w.t_max * 1.01}};

    int violations = 0;
    for (int v = 0; v < 8; ++v) {
        const SimResult r = simulate_two_phase(c, sched, bits(v, 3), fx.cal.consts);
        if (!r.ok()) {
            ++violations;
            CHECK((v == 3 || v == 5 || v == 6));  // 011, 101, 110
        }
    }
    CHECK(violations == 3);
}

TEST_CASE("every stem gate matches its boolean reference inside the window") {
    const Fixture fx;
    struct Case { GateKind kind; int n; };
    for (const Case cs : {Case{GateKind::And, 2}, Case{GateKind::And, 3},
                          Case{GateKind::And, 4}, Case{GateKind::Maj, 3},
                          Case{GateKind::Maj, 5}}) {
        const GateInstance g = fx.stem(cs.kind, cs.n);
        LogicCircuit c;
        c.primary_count = cs.n;
        std::vector<int> wires(cs.n);
        for (int i = 0; i < cs.n; ++i) wires[i] = i;
        c.stages = {stage_from_gate(g, wires, fx.cal.consts)};
        const EvalWindow w = window_for_gate(g, fx.cal.consts);
        PhaseSchedule sched;
        sched.stages = {{0.0, c.stages[0].t_init, c.stages[0].t_init, w.t_eval}};
        for (int v = 0; v < (1 << cs.n); ++v) {
            const SimResult r = simulate_two_phase(c, sched, bits(v, cs.n), fx.cal.consts);
            CHECK(r.ok());
            CHECK(r.output(c, 0) == g.boolean_output(bits(v, cs.n)));
        }
    }
}

TEST_CASE("three-gate AND2 chain evaluates correctly with overlapped inits") {
    const Fixture fx;
    const GateInstance g1 = fx.stem(GateKind::And, 2);
    const GateInstance g2 = fx.stem(GateKind::And, 2);
    const GateInstance g3 = fx.stem(GateKind::And, 2);
    LogicCircuit c;
    c.primary_count = 4;  // P, Q, R, S
    c.stages = {stage_from_gate(g1, {0, 1}, fx.cal.consts),
                stage_from_gate(g2, {4, 2}, fx.cal.consts),
                stage_from_gate(g3, {5, 3}, fx.cal.consts)};

    std::vector<StageTiming> timings;
    for (const auto& st : c.stages) {
        const EvalWindow w = window_for_gate(fx.stem(GateKind::And, 2), fx.cal.consts);
        timings.push_back({st.t_init, w.t_min, st.dependency});
    }
    const PhaseSchedule sched = schedule_chain(timings);
    CHECK(sched.total() ==
          doctest::Approx(timings[0].t_init + 3 * timings[0].t_eval).epsilon(1e-12));

    for (int v = 0; v < 16; ++v) {
        const auto in = bits(v, 4);
        const SimResult r = simulate_two_phase(c, sched, in, fx.cal.consts);
        CHECK(r.ok());
        const int expect = in[0] & in[1] & in[2] & in[3];
        CHECK(r.output(c, 2) == expect);
    }
}

TEST_CASE("adder circuits reproduce the full-adder truth table in both schemes") {
    const Fixture fx;
    const AdderInstance stem =
        AdderInstance::build(Scheme::Stem, fx.lib.adder_stem, fx.lib.adder_conv, fx.tech);
    const AdderInstance conv = AdderInstance::build(Scheme::Conventional,
                                                    fx.lib.adder_stem,
                                                    fx.lib.adder_conv, fx.tech);
    const AdderMetrics ms = adder_metrics(stem, fx.cal.consts);
    const LogicCircuit sc = adder_circuit(stem, fx.cal.consts);
    const LogicCircuit cc = adder_circuit(conv, fx.cal.consts);
    const PhaseSchedule sched =
        schedule_adder(ms.t_init1, ms.t_eval1, ms.t_init2, ms.t_eval2);

    for (int v = 0; v < 8; ++v) {
        const int a = v & 1, b = (v >> 1) & 1, cin = (v >> 2) & 1;
        const auto [cout, sout] = AdderInstance::truth(a, b, cin);
        const SimResult rs = simulate_two_phase(sc, sched, {a, b, cin}, fx.cal.consts);
        CHECK(rs.ok());
        CHECK(rs.output(sc, 0) == cout);
        CHECK(rs.output(sc, 1) == sout);
        const SimResult rc = simulate_conventional(cc, {a, b, cin});
        CHECK(rc.ok());
        CHECK(rc.output(cc, 0) == cout);
        CHECK(rc.output(cc, 1) == sout);
    }
}

TEST_CASE("a too-short init pulse is flagged, not silently absorbed") {
    const Fixture fx;
    // NAND3 initializes to 1, so the default-0 output needs a real transfer
    const GateInstance g = GateInstance::build(
        GateKind::Nand, Scheme::Stem, 3, fx.lib.gate("AND3").stem, fx.tech);
    LogicCircuit c;
    c.primary_count = 3;
    c.stages = {stage_from_gate(g, {0, 1, 2}, fx.cal.consts)};
    const EvalWindow w = window_for_gate(g, fx.cal.consts);

    PhaseSchedule good;
    good.stages = {{0.0, c.stages[0].t_init, c.stages[0].t_init, w.t_eval}};
    CHECK(simulate_two_phase(c, good, {0, 1, 1}, fx.cal.consts).ok());

    PhaseSchedule bad;
    const double too_short = 0.5 * c.stages[0].t_init;
    bad.stages = {{0.0, too_short, too_short, w.t_eval}};
    const SimResult r = simulate_two_phase(c, bad, {0, 1, 1}, fx.cal.consts);
    CHECK_FALSE(r.ok());
    CHECK(r.violations[0].message.find("init pulse") != std::string::npos);
}
