#pragma once

#include <limits>
#include <string>
#include <vector>

#include "aslsim/gates.hpp"
#include "aslsim/perf.hpp"

namespace aslsim {

/// Feasible evaluation-pulse widths for a STEM gate: every intended switch
/// completes by t_min, the fastest unintended switch needs t_max.
struct EvalWindow {
    double t_min = 0.0;   // s
    double t_max = std::numeric_limits<double>::infinity();
    double t_eval = 0.0;  // chosen width
    bool bounded() const { return std::isfinite(t_max); }
    double margin() const { return t_max / t_eval; }
};

/// Derives the window from per-vector net currents (exhaustive over the
/// gate's input vectors). safety scales the chosen t_eval above t_min.
/// Throws ScheduleError when t_min >= t_max.
EvalWindow window_for_gate(const GateInstance& stem_gate, const SwitchingConstants& c,
                           double safety = 1.0);

/// One stage's pulse widths plus how its init value is produced: a constant
/// can be initialized while the previous stage still evaluates, a computed
/// value (adder carry) cannot.
enum class InitDependency { Constant, Computed };

struct StageTiming {
    double t_init = 0.0;
    double t_eval = 0.0;
    InitDependency dependency = InitDependency::Constant;
};

struct PulsePair {
    double init_start = 0.0, init_width = 0.0;
    double eval_start = 0.0, eval_width = 0.0;
    double init_end() const { return init_start + init_width; }
    double eval_end() const { return eval_start + eval_width; }
};

struct PhaseSchedule {
    std::vector<PulsePair> stages;
    double total() const;
    void validate() const;  // eval after init, non-negative widths
};

/// Pipeline rule for a linear chain: stage g+1 initializes during stage g's
/// evaluation when its init value is constant, and only after it when the
/// value is computed upstream.
PhaseSchedule schedule_chain(const std::vector<StageTiming>& stages);

/// Unified two-pulse adder schedule: shared t_init = max(t_init1, t_init2),
/// shared t_eval = max(t_eval1, t_eval2), sum-side pulses delayed by the
/// init-width difference. Total comes out as 2 (t_init + t_eval).
PhaseSchedule schedule_adder(double t_init1, double t_eval1, double t_init2,
                             double t_eval2);

/// Pulse edges as a JSON document (stage name, start/width per phase).
std::string schedule_to_json(const PhaseSchedule& schedule,
                             const std::vector<std::string>& names);

/// Monospaced Gantt rendering, one init/eval row pair per stage.
std::string render_timing_diagram(const PhaseSchedule& schedule,
                                  const std::vector<std::string>& names,
                                  int columns = 64);

}  // namespace aslsim
