#include "aslsim/two_phase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aslsim/errors.hpp"

namespace aslsim {

namespace {

std::string vector_label(const std::vector<int>& vals) {
    std::string s;
    for (int v : vals) s += v ? '1' : '0';
    return s;
}

std::vector<int> resolve_inputs(const StageSpec& st, const std::vector<int>& signals) {
    std::vector<int> vals;
    vals.reserve(st.input_signals.size());
    for (int s : st.input_signals) vals.push_back(signals.at(s));
    return vals;
}

}  // namespace

SimResult simulate_two_phase(const LogicCircuit& circuit, const PhaseSchedule& schedule,
                             const std::vector<int>& inputs,
                             const SwitchingConstants& consts) {
    if (static_cast<int>(inputs.size()) != circuit.primary_count)
        throw ScheduleError("simulation expects " +
                            std::to_string(circuit.primary_count) + " inputs");
    if (schedule.stages.size() != circuit.stages.size())
        throw ScheduleError("schedule/circuit stage count mismatch");
    schedule.validate();

    SimResult res;
    res.signals = inputs;
    res.signals.resize(circuit.primary_count + circuit.stages.size(), 0);

    struct Ev {
        double t;
        int stage;
        Phase phase;
    };
    std::vector<Ev> events;
    for (size_t i = 0; i < circuit.stages.size(); ++i) {
        events.push_back({schedule.stages[i].init_end(), static_cast<int>(i), Phase::Init});
        events.push_back({schedule.stages[i].eval_end(), static_cast<int>(i), Phase::Eval});
    }
    std::sort(events.begin(), events.end(), [](const Ev& a, const Ev& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.phase != b.phase) return a.phase == Phase::Init;
        return a.stage < b.stage;
    });

    for (const Ev& ev : events) {
        const StageSpec& st = circuit.stages[ev.stage];
        const int out_sig = circuit.output_signal(ev.stage);
        const std::vector<int> vals = resolve_inputs(st, res.signals);
        const PulsePair& pulse = schedule.stages[ev.stage];
        TraceEvent te;
        te.time = ev.t;
        te.stage = ev.stage;
        te.phase = ev.phase;
        te.before = res.signals[out_sig];

        if (ev.phase == Phase::Init) {
            const int target = st.init_value(vals);
            const PhaseResult r = st.init_phase(vals);
            te.drive = r.drive;
            const double need = switching_delay(std::abs(r.drive), consts, st.magnet_plan);
            // a fresh write only costs time when the stored value differs
            if (res.signals[out_sig] != target && need > pulse.init_width) {
                res.violations.push_back(
                    {ev.stage, vector_label(vals),
                     st.name + ": init pulse " + std::to_string(pulse.init_width) +
                         " s too short for transfer needing " + std::to_string(need) +
                         " s"});
                te.note = "init incomplete";
            }
            res.signals[out_sig] = target;
            te.after = target;
        } else {
            const PhaseResult r = st.eval_phase(vals);
            te.drive = r.drive;
            const int state = res.signals[out_sig];
            const bool opposes =
                (state == 0 && r.drive > 0.0) || (state == 1 && r.drive < 0.0);
            if (opposes) {
                const double need =
                    switching_delay(std::abs(r.drive), consts, st.magnet_plan);
                if (need <= pulse.eval_width) {
                    res.signals[out_sig] = 1 - state;
                    te.note = "switched";
                }
            }
            te.after = res.signals[out_sig];
            const int want = st.boolean(vals);
            if (te.after != want) {
                res.violations.push_back(
                    {ev.stage, vector_label(vals),
                     st.name + ": output " + std::to_string(te.after) +
                         " disagrees with reference " + std::to_string(want) +
                         " after eval pulse of " + std::to_string(pulse.eval_width) +
                         " s"});
                te.note = te.note.empty() ? "protocol violation"
                                          : te.note + ", protocol violation";
            }
        }
        res.trace.push_back(te);
    }
    return res;
}

SimResult simulate_conventional(const LogicCircuit& circuit,
                                const std::vector<int>& inputs) {
    if (static_cast<int>(inputs.size()) != circuit.primary_count)
        throw ScheduleError("simulation expects " +
                            std::to_string(circuit.primary_count) + " inputs");
    SimResult res;
    res.signals = inputs;
    res.signals.resize(circuit.primary_count + circuit.stages.size(), 0);
    for (size_t i = 0; i < circuit.stages.size(); ++i) {
        const StageSpec& st = circuit.stages[i];
        const std::vector<int> vals = resolve_inputs(st, res.signals);
        const PhaseResult r = st.eval_phase(vals);
        const int out = r.drive > 0.0 ? 1 : 0;
        res.signals[circuit.output_signal(static_cast<int>(i))] = out;
        TraceEvent te;
        te.stage = static_cast<int>(i);
        te.phase = Phase::Eval;
        te.drive = r.drive;
        te.after = out;
        res.trace.push_back(te);
        const int want = st.boolean(vals);
        if (out != want)
            res.violations.push_back({static_cast<int>(i), vector_label(vals),
                                      st.name + ": settled value disagrees with reference"});
    }
    return res;
}

StageSpec stage_from_gate(const GateInstance& gate, std::vector<int> input_signals,
                          const SwitchingConstants& consts) {
    if (static_cast<int>(input_signals.size()) != gate.fan_in())
        throw ScheduleError("stage wiring does not match gate fan-in");
    StageSpec st;
    st.name = to_string(gate.kind()) +
              (gate.fan_in() > 1 ? std::to_string(gate.fan_in()) : "");
    st.input_signals = std::move(input_signals);
    st.magnet_plan = gate.tech().magnet_plan;
    const GateInstance* g = &gate;
    st.boolean = [g](const std::vector<int>& in) { return g->boolean_output(in); };
    if (gate.scheme() == Scheme::Stem) {
        st.init_value = [g](const std::vector<int>& in) { return g->init_value(in); };
        st.init_phase = [g](const std::vector<int>& in) {
            return g->evaluate_phase(Phase::Init, in);
        };
        st.eval_phase = [g](const std::vector<int>& in) {
            return g->evaluate_phase(Phase::Eval, in);
        };
        // (N)AND/(N)OR initialize from a constant magnet, MAJ from an input
        st.dependency = gate.kind() == GateKind::Maj ? InitDependency::Computed
                                                     : InitDependency::Constant;
        std::vector<int> probe(gate.fan_in(), 1);
        st.t_init = switching_delay(
            std::abs(gate.evaluate_phase(Phase::Init, probe).drive), consts,
            st.magnet_plan);
    } else {
        st.eval_phase = [g](const std::vector<int>& in) {
            return g->evaluate_conventional(in);
        };
    }
    return st;
}

LogicCircuit adder_circuit(const AdderInstance& adder,
                           const SwitchingConstants& consts) {
    LogicCircuit c;
    c.primary_count = 3;  // a, b, c_in
    const AdderInstance* ad = &adder;
    const Geometry plan = adder.tech().magnet_plan;

    StageSpec carry;
    carry.name = "c_out";
    carry.input_signals = {0, 1, 2};
    carry.magnet_plan = plan;
    carry.boolean = [](const std::vector<int>& in) {
        return AdderInstance::truth(in[0], in[1], in[2]).first;
    };
    StageSpec sum;
    sum.name = "s_out";
    sum.input_signals = {0, 1, 2, 3};  // a, b, c_in, c_out
    sum.magnet_plan = plan;
    sum.boolean = [](const std::vector<int>& in) {
        return AdderInstance::truth(in[0], in[1], in[2]).second;
    };

    if (adder.scheme() == Scheme::Stem) {
        carry.dependency = InitDependency::Constant;  // first stage anyway
        carry.init_value = [](const std::vector<int>& in) { return in[0]; };
        carry.init_phase = [ad](const std::vector<int>& in) {
            return ad->step(AdderStep::InitCarry, in[0], in[1], in[2], 0);
        };
        carry.eval_phase = [ad](const std::vector<int>& in) {
            return ad->step(AdderStep::EvalCarry, in[0], in[1], in[2], 0);
        };
        sum.dependency = InitDependency::Computed;  // carries the computed c'_out
        sum.init_value = [](const std::vector<int>& in) { return 1 - in[3]; };
        sum.init_phase = [ad](const std::vector<int>& in) {
            return ad->step(AdderStep::InitSum, in[0], in[1], in[2], in[3]);
        };
        sum.eval_phase = [ad](const std::vector<int>& in) {
            return ad->step(AdderStep::EvalSum, in[0], in[1], in[2], in[3]);
        };
        const PhaseResult i1 = adder.step(AdderStep::InitCarry, 1, 0, 0, 0);
        const PhaseResult i3 = adder.step(AdderStep::InitSum, 0, 0, 0, 1);
        carry.t_init = switching_delay(std::abs(i1.drive), consts, plan);
        sum.t_init = switching_delay(std::abs(i3.drive), consts, plan);
    } else {
        carry.eval_phase = [ad](const std::vector<int>& in) {
            return ad->stage_carry(in[0], in[1], in[2]);
        };
        sum.eval_phase = [ad](const std::vector<int>& in) {
            return ad->stage_sum(in[0], in[1], in[2], in[3]);
        };
    }
    c.stages = {carry, sum};
    return c;
}

}  // namespace aslsim
