#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aslsim/adder.hpp"
#include "aslsim/schedule.hpp"

namespace aslsim {

/// One output magnet written by an init/eval pulse pair. The callables
/// resolve net drives from the stage's input values at pulse time.
struct StageSpec {
    std::string name;
    std::vector<int> input_signals;  // indices into the circuit signal table
    std::function<int(const std::vector<int>&)> boolean;
    std::function<int(const std::vector<int>&)> init_value;
    std::function<PhaseResult(const std::vector<int>&)> init_phase;
    std::function<PhaseResult(const std::vector<int>&)> eval_phase;
    Geometry magnet_plan;
    InitDependency dependency = InitDependency::Constant;
    double t_init = 0.0;  // nominal pulse widths for scheduling
    double t_eval = 0.0;
};

/// Directed acyclic stage graph; signal i < primary_count is a primary
/// input, signal primary_count + s is stage s's output magnet.
struct LogicCircuit {
    int primary_count = 0;
    std::vector<StageSpec> stages;
    int output_signal(int stage) const { return primary_count + stage; }
};

struct TraceEvent {
    double time = 0.0;
    int stage = -1;
    Phase phase = Phase::Init;
    double drive = 0.0;
    int before = 0, after = 0;
    std::string note;
};

struct ViolationReport {
    int stage = -1;
    std::string vector_label;
    std::string message;
};

struct SimResult {
    std::vector<int> signals;             // final values (primaries + outputs)
    std::vector<TraceEvent> trace;
    std::vector<ViolationReport> violations;
    bool ok() const { return violations.empty(); }
    int output(const LogicCircuit& c, int stage) const {
        return signals[c.output_signal(stage)];
    }
};

/// Event-driven two-phase simulation: at each init-pulse end the stage's
/// output takes its initialization value; at each eval-pulse end the magnet
/// flips iff the net current opposes it and its switching delay fits the
/// pulse. Disagreements with the Boolean reference are reported, never
/// silently kept.
SimResult simulate_two_phase(const LogicCircuit& circuit,
                             const PhaseSchedule& schedule,
                             const std::vector<int>& inputs,
                             const SwitchingConstants& consts);

/// Conventional single-phase evaluation in topological (stage) order.
SimResult simulate_conventional(const LogicCircuit& circuit,
                                const std::vector<int>& inputs);

/// Circuit adapters.
StageSpec stage_from_gate(const GateInstance& gate, std::vector<int> input_signals,
                          const SwitchingConstants& consts);
/// The five-magnet adder as a two-stage circuit (signals: a, b, c_in).
LogicCircuit adder_circuit(const AdderInstance& adder,
                           const SwitchingConstants& consts);

}  // namespace aslsim
