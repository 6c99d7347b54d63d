#include "aslsim/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "aslsim/errors.hpp"

namespace aslsim {

EvalWindow window_for_gate(const GateInstance& gate, const SwitchingConstants& c,
                           double safety) {
    if (gate.scheme() != Scheme::Stem)
        throw ScheduleError("window_for_gate applies to STEM gates");
    if (!(safety >= 1.0)) throw ScheduleError("window safety factor must be >= 1");

    const int n = gate.fan_in();
    const Geometry& plan = gate.tech().magnet_plan;
    const double drive_floor = 1e-9 * gate.unit_current();
    EvalWindow w;
    for (int v = 0; v < (1 << n); ++v) {
        std::vector<int> inputs(n);
        for (int i = 0; i < n; ++i) inputs[i] = (v >> i) & 1;
        const int init = gate.init_value(inputs);
        const int want = gate.boolean_output(inputs);
        const PhaseResult r = gate.evaluate_phase(Phase::Eval, inputs);
        // tie votes cancel to numerical noise and exert no torque
        const bool opposes = (init == 0 && r.drive > drive_floor) ||
                             (init == 1 && r.drive < -drive_floor);
        if (want != init) {
            // must switch: pulse must cover this vector's delay
            w.t_min = std::max(w.t_min,
                               switching_delay(std::abs(r.drive), c, plan));
        } else if (opposes) {
            // must hold: pulse must end before this vector could switch
            w.t_max = std::min(w.t_max,
                               switching_delay(std::abs(r.drive), c, plan));
        }
    }
    if (!(w.t_min < w.t_max))
        throw ScheduleError(
            "infeasible evaluation window for " + to_string(gate.kind()) +
            std::to_string(n) + ": t_min " + std::to_string(w.t_min) +
            " >= t_max " + std::to_string(w.t_max) +
            " (gate cannot be two-phase clocked at this layout)");
    w.t_eval = safety * w.t_min;
    if (!(w.t_eval < w.t_max))
        throw ScheduleError("safety factor pushes t_eval past t_max");
    return w;
}

double PhaseSchedule::total() const {
    double t = 0.0;
    for (const auto& p : stages) t = std::max(t, std::max(p.init_end(), p.eval_end()));
    return t;
}

void PhaseSchedule::validate() const {
    for (size_t i = 0; i < stages.size(); ++i) {
        const auto& p = stages[i];
        if (p.init_width < 0.0 || p.eval_width < 0.0 || p.init_start < 0.0)
            throw ScheduleError("stage " + std::to_string(i) +
                                ": negative pulse time");
        if (p.eval_start < p.init_end())
            throw ScheduleError("stage " + std::to_string(i) +
                                ": eval pulse starts before init completes");
    }
}

PhaseSchedule schedule_chain(const std::vector<StageTiming>& stages) {
    PhaseSchedule sched;
    double prev_eval_start = 0.0, prev_eval_end = 0.0;
    for (size_t i = 0; i < stages.size(); ++i) {
        const StageTiming& st = stages[i];
        if (!(st.t_init > 0.0) || !(st.t_eval > 0.0))
            throw ScheduleError("stage " + std::to_string(i) +
                                ": pulse widths must be positive");
        PulsePair p;
        if (i == 0) {
            p.init_start = 0.0;
        } else if (st.dependency == InitDependency::Constant) {
            // constant init rides along with the previous evaluation
            p.init_start = prev_eval_start;
        } else {
            p.init_start = prev_eval_end;
        }
        p.init_width = st.t_init;
        p.eval_start = std::max(p.init_end(), prev_eval_end);
        p.eval_width = st.t_eval;
        sched.stages.push_back(p);
        prev_eval_start = p.eval_start;
        prev_eval_end = p.eval_end();
    }
    sched.validate();
    return sched;
}

PhaseSchedule schedule_adder(double t_init1, double t_eval1, double t_init2,
                             double t_eval2) {
    for (double t : {t_init1, t_eval1, t_init2, t_eval2})
        if (!(t > 0.0)) throw ScheduleError("adder step times must be positive");
    const double ti = std::max(t_init1, t_init2);
    const double te = std::max(t_eval1, t_eval2);
    PhaseSchedule sched;
    PulsePair carry;
    carry.init_start = 0.0;
    carry.init_width = ti;
    carry.eval_start = ti;
    carry.eval_width = te;
    PulsePair sum;
    // the sum-side init can only follow the carry evaluation
    sum.init_start = carry.eval_end();
    sum.init_width = ti;
    sum.eval_start = sum.init_end();
    sum.eval_width = te;
    sched.stages = {carry, sum};
    sched.validate();
    return sched;
}

std::string schedule_to_json(const PhaseSchedule& schedule,
                             const std::vector<std::string>& names) {
    nlohmann::ordered_json doc;
    doc["total_s"] = schedule.total();
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (size_t i = 0; i < schedule.stages.size(); ++i) {
        const auto& p = schedule.stages[i];
        nlohmann::ordered_json st;
        st["stage"] = i < names.size() ? names[i] : "s" + std::to_string(i);
        st["init_start_s"] = p.init_start;
        st["init_width_s"] = p.init_width;
        st["eval_start_s"] = p.eval_start;
        st["eval_width_s"] = p.eval_width;
        stages.push_back(st);
    }
    doc["stages"] = stages;
    return doc.dump(2) + "\n";
}

std::string render_timing_diagram(const PhaseSchedule& schedule,
                                  const std::vector<std::string>& names,
                                  int columns) {
    if (schedule.stages.empty()) return "(empty schedule)\n";
    const double total = schedule.total();
    if (!(total > 0.0)) return "(zero-length schedule)\n";
    auto col = [&](double t) {
        int c = static_cast<int>(std::floor(t / total * columns));
        return std::min(std::max(c, 0), columns);
    };
    size_t name_w = 5;
    for (const auto& n : names) name_w = std::max(name_w, n.size());

    std::ostringstream out;
    for (size_t i = 0; i < schedule.stages.size(); ++i) {
        const std::string name =
            i < names.size() ? names[i] : "s" + std::to_string(i);
        const auto& p = schedule.stages[i];
        auto row = [&](const char* tag, double start, double width) {
            std::string bar(columns, '.');
            for (int c2 = col(start); c2 < col(start + width); ++c2) bar[c2] = '#';
            out << name << std::string(name_w - name.size(), ' ') << " " << tag
                << " |" << bar << "|\n";
        };
        row("init", p.init_start, p.init_width);
        row("eval", p.eval_start, p.eval_width);
    }
    out << std::string(name_w + 6, ' ') << " 0" << std::string(columns - 2, ' ')
        << "t=" << total * 1e12 << "ps\n";
    return out.str();
}

}  // namespace aslsim
