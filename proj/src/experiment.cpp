#include "aslsim/experiment.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aslsim/adder.hpp"
#include "aslsim/constants.hpp"
#include "aslsim/errors.hpp"
#include "aslsim/perf.hpp"
#include "aslsim/two_phase.hpp"

namespace aslsim {

using json = nlohmann::json;

MacrospinParams McSettings::macrospin(const Geometry& magnet_plan) const {
    MacrospinParams mp;
    mp.alpha = alpha;
    mp.magnet_plan = magnet_plan;
    mp.hk_am = hk_am;
    mp.temperature = temperature_k;
    mp.dt = dt_ps * constants::ps;
    mp.horizon = horizon_ps * constants::ps;
    mp.switch_threshold = threshold;
    mp.torque_scale = torque_scale;
    mp.initial_angle = initial_angle;
    return mp;
}

std::pair<GateKind, int> parse_gate_name(const std::string& name) {
    size_t i = 0;
    while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
    const std::string word = name.substr(0, i);
    const std::string digits = name.substr(i);
    const GateKind kind = gate_kind_from_string(word);
    int n = 1;
    if (!digits.empty()) {
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw LayoutError("bad gate name '" + name + "'");
        n = std::stoi(digits);
    }
    if (kind == GateKind::Inv || kind == GateKind::Buf) {
        if (!digits.empty() && n != 1)
            throw LayoutError(word + " takes no fan-in suffix");
        n = 1;
    } else if (digits.empty()) {
        throw LayoutError("gate '" + name + "' needs a fan-in suffix");
    } else if (kind == GateKind::Maj) {
        if (n < 3 || n % 2 == 0)
            throw LayoutError("MAJ requires odd fan-in >= 3, got " + name);
    } else if (n < 2) {
        throw LayoutError(word + " requires fan-in >= 2, got " + name);
    }
    return {kind, n};
}

namespace {

struct Diag {
    std::vector<std::string> messages;
    void add(const std::string& where, const std::string& what) {
        messages.push_back(where + ": " + what);
    }
};

bool expect_number(const json& v) { return v.is_number(); }

double get_num(const json& obj, const std::string& key, double fallback, Diag& diag,
               const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!expect_number(obj.at(key))) {
        diag.add(where + "." + key, "must be a number");
        return fallback;
    }
    return obj.at(key).get<double>();
}

void check_keys(const json& obj, const std::set<std::string>& allowed, Diag& diag,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) diag.add(where, "unknown key '" + it.key() + "'");
}

ExperimentConfig walk_config(const json& doc, Diag& diag, const std::string& origin) {
    ExperimentConfig cfg;
    if (!doc.is_object()) {
        diag.add(origin, "top level must be a JSON object");
        return cfg;
    }
    check_keys(doc,
               {"experiment", "seed", "output", "parameters", "layout_file", "gates",
                "q_values", "q_gate", "mc"},
               diag, origin);

    if (!doc.contains("experiment") || !doc.at("experiment").is_string()) {
        diag.add(origin + ".experiment", "required string");
    } else {
        cfg.experiment = doc.at("experiment").get<std::string>();
        static const std::set<std::string> kinds = {"compare_gates", "q_sweep", "adder",
                                                    "switching_mc"};
        if (!kinds.count(cfg.experiment))
            diag.add(origin + ".experiment",
                     "unknown experiment '" + cfg.experiment + "'");
    }
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned())
            diag.add(origin + ".seed", "must be a non-negative integer");
        else
            cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("output")) {
        const json& out = doc.at("output");
        if (!out.is_object()) {
            diag.add(origin + ".output", "must be an object");
        } else {
            check_keys(out, {"dir", "format"}, diag, origin + ".output");
            if (out.contains("dir")) {
                if (!out.at("dir").is_string())
                    diag.add(origin + ".output.dir", "must be a string");
                else
                    cfg.out_dir = out.at("dir").get<std::string>();
            }
            if (out.contains("format")) {
                const std::string f =
                    out.at("format").is_string() ? out.at("format").get<std::string>() : "";
                if (f != "csv" && f != "json")
                    diag.add(origin + ".output.format", "must be csv or json");
                else
                    cfg.format = f;
            }
        }
    }
    if (doc.contains("layout_file")) {
        if (!doc.at("layout_file").is_string())
            diag.add(origin + ".layout_file", "must be a string");
        else
            cfg.layout_file = doc.at("layout_file").get<std::string>();
    }

    if (doc.contains("parameters")) {
        const json& p = doc.at("parameters");
        const std::string where = origin + ".parameters";
        if (!p.is_object()) {
            diag.add(where, "must be an object");
        } else {
            check_keys(p,
                       {"p", "beta", "rho_fm", "rho_ch", "lambda_fm", "lambda_ch",
                        "magnet_length", "magnet_width", "magnet_thickness",
                        "channel_width", "channel_thickness", "vdd", "ms_emu_cc"},
                       diag, where);
            TechParams& t = cfg.tech;
            t.fm.p = get_num(p, "p", t.fm.p, diag, where);
            t.fm.beta = get_num(p, "beta", p.contains("p") ? t.fm.p : t.fm.beta, diag,
                                where);
            t.fm.rho = get_num(p, "rho_fm", t.fm.rho, diag, where);
            t.ch.rho = get_num(p, "rho_ch", t.ch.rho, diag, where);
            t.fm.lambda_sf = get_num(p, "lambda_fm", t.fm.lambda_sf, diag, where);
            t.ch.lambda_sf = get_num(p, "lambda_ch", t.ch.lambda_sf, diag, where);
            t.magnet_plan.length =
                get_num(p, "magnet_length", t.magnet_plan.length, diag, where);
            t.magnet_plan.width =
                get_num(p, "magnet_width", t.magnet_plan.width, diag, where);
            t.magnet_plan.thickness =
                get_num(p, "magnet_thickness", t.magnet_plan.thickness, diag, where);
            t.channel_width = get_num(p, "channel_width", t.channel_width, diag, where);
            t.channel_thickness =
                get_num(p, "channel_thickness", t.channel_thickness, diag, where);
            t.vdd = get_num(p, "vdd", t.vdd, diag, where);
            t.ms_emu_cc = get_num(p, "ms_emu_cc", t.ms_emu_cc, diag, where);

            // named-field invariants
            if (!(t.fm.lambda_sf > 0.0)) diag.add(where + ".lambda_fm", "must be > 0");
            if (!(t.ch.lambda_sf > 0.0)) diag.add(where + ".lambda_ch", "must be > 0");
            if (!(t.fm.rho > 0.0)) diag.add(where + ".rho_fm", "must be > 0");
            if (!(t.ch.rho > 0.0)) diag.add(where + ".rho_ch", "must be > 0");
            if (!(t.fm.p >= 0.0 && t.fm.p < 1.0)) diag.add(where + ".p", "must be in [0,1)");
            if (!(t.fm.beta >= 0.0 && t.fm.beta < 1.0))
                diag.add(where + ".beta", "must be in [0,1)");
            if (!(t.vdd > 0.0)) diag.add(where + ".vdd", "must be > 0");
            if (!(t.ms_emu_cc > 0.0)) diag.add(where + ".ms_emu_cc", "must be > 0");
            for (const auto& [k, v] :
                 std::initializer_list<std::pair<const char*, double>>{
                     {"magnet_length", t.magnet_plan.length},
                     {"magnet_width", t.magnet_plan.width},
                     {"magnet_thickness", t.magnet_plan.thickness},
                     {"channel_width", t.channel_width},
                     {"channel_thickness", t.channel_thickness}})
                if (!(v > 0.0)) diag.add(where + "." + k, "must be > 0");
        }
    }

    if (doc.contains("gates")) {
        if (!doc.at("gates").is_array()) {
            diag.add(origin + ".gates", "must be an array of gate names");
        } else {
            cfg.gates.clear();
            for (const auto& g : doc.at("gates")) {
                if (!g.is_string()) {
                    diag.add(origin + ".gates", "entries must be strings");
                    continue;
                }
                const std::string name = g.get<std::string>();
                try {
                    parse_gate_name(name);
                    cfg.gates.push_back(name);
                } catch (const std::exception& e) {
                    diag.add(origin + ".gates", e.what());
                }
            }
            if (cfg.gates.empty()) diag.add(origin + ".gates", "must not be empty");
        }
    }
    if (doc.contains("q_values")) {
        if (!doc.at("q_values").is_array()) {
            diag.add(origin + ".q_values", "must be an array of numbers");
        } else {
            cfg.q_values.clear();
            for (const auto& q : doc.at("q_values")) {
                if (!q.is_number() || !(q.get<double>() >= 1.0))
                    diag.add(origin + ".q_values", "entries must be numbers >= 1");
                else
                    cfg.q_values.push_back(q.get<double>());
            }
            if (cfg.q_values.empty()) diag.add(origin + ".q_values", "must not be empty");
        }
    }
    if (doc.contains("q_gate")) {
        if (!doc.at("q_gate").is_string()) {
            diag.add(origin + ".q_gate", "must be a string");
        } else {
            cfg.q_gate = doc.at("q_gate").get<std::string>();
            try {
                parse_gate_name(cfg.q_gate);
            } catch (const std::exception& e) {
                diag.add(origin + ".q_gate", e.what());
            }
        }
    }
    if (doc.contains("mc")) {
        const json& m = doc.at("mc");
        const std::string where = origin + ".mc";
        if (!m.is_object()) {
            diag.add(where, "must be an object");
        } else {
            check_keys(m,
                       {"trials", "dt_ps", "horizon_ps", "alpha", "temperature_k",
                        "hk_am", "torque_scale", "threshold", "initial_angle"},
                       diag, where);
            McSettings& mc = cfg.mc;
            if (m.contains("trials")) {
                if (!m.at("trials").is_number_integer() || m.at("trials").get<int>() < 1)
                    diag.add(where + ".trials", "must be an integer >= 1");
                else
                    mc.trials = m.at("trials").get<int>();
            }
            mc.dt_ps = get_num(m, "dt_ps", mc.dt_ps, diag, where);
            mc.horizon_ps = get_num(m, "horizon_ps", mc.horizon_ps, diag, where);
            mc.alpha = get_num(m, "alpha", mc.alpha, diag, where);
            mc.temperature_k = get_num(m, "temperature_k", mc.temperature_k, diag, where);
            mc.hk_am = get_num(m, "hk_am", mc.hk_am, diag, where);
            mc.torque_scale = get_num(m, "torque_scale", mc.torque_scale, diag, where);
            mc.threshold = get_num(m, "threshold", mc.threshold, diag, where);
            mc.initial_angle = get_num(m, "initial_angle", mc.initial_angle, diag, where);
            if (!(mc.dt_ps > 0.0)) diag.add(where + ".dt_ps", "must be > 0");
            if (!(mc.horizon_ps > mc.dt_ps))
                diag.add(where + ".horizon_ps", "must exceed dt_ps");
            if (!(mc.alpha > 0.0 && mc.alpha < 1.0))
                diag.add(where + ".alpha", "must be in (0,1)");
            if (!(mc.temperature_k >= 0.0))
                diag.add(where + ".temperature_k", "must be >= 0");
            if (!(mc.threshold > 0.0 && mc.threshold < 1.0))
                diag.add(where + ".threshold", "must be in (0,1)");
            if (!(mc.torque_scale > 0.0))
                diag.add(where + ".torque_scale", "must be > 0");
        }
    }
    return cfg;
}

}  // namespace

std::vector<std::string> validate_config_text(const std::string& text,
                                              const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        return {origin + ": JSON parse error: " + e.what()};
    }
    Diag diag;
    walk_config(doc, diag, origin);
    return diag.messages;
}

std::vector<std::string> validate_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) return {path + ": cannot open file"};
    std::ostringstream ss;
    ss << f.rdbuf();
    return validate_config_text(ss.str(), path);
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": JSON parse error: " + std::string(e.what()));
    }
    Diag diag;
    ExperimentConfig cfg = walk_config(doc, diag, origin);
    if (!diag.messages.empty()) {
        std::string all;
        for (const auto& m : diag.messages) all += "\n  " + m;
        throw ConfigError("invalid config:" + all);
    }
    cfg.canonical = doc.dump();
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path + ": cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), path);
}

namespace {

struct Context {
    TechParams tech;
    LayoutLibrary layouts;
    Calibration cal;
};

Context make_context(const ExperimentConfig& cfg) {
    Context ctx;
    ctx.tech = cfg.tech;
    ctx.layouts = cfg.layout_file ? load_layout_file(*cfg.layout_file)
                                  : LayoutLibrary::calibrated_defaults();
    ctx.cal = calibrate_f(ctx.layouts.reference, ctx.tech, defaults::anchor_t_init);
    return ctx;
}

GateLayoutPair layouts_for(const Context& ctx, GateKind kind, int n) {
    return layouts_for_gate(ctx.layouts, kind, n);
}

Report base_report(const ExperimentConfig& cfg) {
    Report rep;
    rep.experiment = cfg.experiment;
    rep.seed = cfg.seed;
    rep.config_hash = fnv1a_hex(cfg.canonical + "#seed=" + std::to_string(cfg.seed));
    return rep;
}

void add_vector_rows(Table& t, const std::string& gate, const GateInstance& g,
                     const SwitchingConstants& c) {
    const int n = g.fan_in();
    const std::string scheme =
        g.scheme() == Scheme::Conventional ? "conventional" : "stem";
    auto emit = [&](const std::string& vec, const PhaseResult& r) {
        std::string t_s = "no-switch", e_s = "no-switch", edp_s = "no-switch";
        const double i_s = std::abs(r.drive);
        if (i_s > 1e-9 * g.unit_current()) {
            const double t = switching_delay(i_s, c, g.tech().magnet_plan);
            const double en = switching_energy(r.charge, t, c);
            t_s = format_number(t / constants::ps);
            e_s = format_number(en * 1e12);
            edp_s = format_number(en * t);
        }
        t.add_row({gate, scheme, vec, format_number(r.drive * 1e3),
                   format_number(r.charge * 1e3), t_s, e_s, edp_s});
    };
    if (g.scheme() == Scheme::Stem) {
        std::vector<int> probe(n, 1);
        emit("init", g.evaluate_phase(Phase::Init, probe));
    }
    for (int v = 0; v < (1 << n); ++v) {
        std::vector<int> in(n);
        std::string vec;
        for (int i = 0; i < n; ++i) {
            in[i] = (v >> i) & 1;
            vec += in[i] ? '1' : '0';
        }
        emit(vec, g.scheme() == Scheme::Conventional
                      ? g.evaluate_conventional(in)
                      : g.evaluate_phase(Phase::Eval, in));
    }
}

Report run_compare_gates(const ExperimentConfig& cfg) {
    const Context ctx = make_context(cfg);
    Report rep = base_report(cfg);

    Table per{"gate_metrics",
              {"gate", "scheme", "t_init_ps", "t_eval_ps", "delay_ps", "energy_pj",
               "unit_current_ma", "area_nm2"},
              {}};
    Table ratios{"scheme_ratios", {"gate", "delay_ratio", "energy_ratio"}, {}};
    Table vectors{"vector_metrics",
                  {"gate", "scheme", "vector", "i_s_ma", "i_c_ma", "t_ps",
                   "e_pj", "edp_js"},
                  {}};

    for (const std::string& name : cfg.gates) {
        const auto [kind, n] = parse_gate_name(name);
        const GateLayoutPair lp = layouts_for(ctx, kind, n);
        const SchemeComparison cmp = compare_gate(kind, n, lp, ctx.tech, ctx.cal.consts);
        auto row = [&](const GateMetrics& m) {
            per.add_row({name, m.scheme == Scheme::Conventional ? "conventional" : "stem",
                         format_number(m.t_init / constants::ps),
                         format_number(m.t_eval / constants::ps),
                         format_number(m.delay / constants::ps),
                         format_number(m.energy * 1e12),
                         format_number(m.unit_current * 1e3), format_number(m.area)});
        };
        row(cmp.conv);
        row(cmp.stem);
        ratios.add_row({name, format_number(cmp.delay_ratio),
                        format_number(cmp.energy_ratio)});
        const GateInstance conv =
            GateInstance::build(kind, Scheme::Conventional, n, lp.conv, ctx.tech);
        const GateInstance stem =
            GateInstance::build(kind, Scheme::Stem, n, lp.stem, ctx.tech);
        add_vector_rows(vectors, name, conv, ctx.cal.consts);
        add_vector_rows(vectors, name, stem, ctx.cal.consts);
    }
    rep.tables = {per, ratios, vectors};
    return rep;
}

Report run_q_sweep(const ExperimentConfig& cfg) {
    const Context ctx = make_context(cfg);
    Report rep = base_report(cfg);
    const auto [kind, n] = parse_gate_name(cfg.q_gate);
    if (kind == GateKind::Inv || kind == GateKind::Buf)
        throw ConfigError("q_sweep needs a multi-input STEM gate");
    const QSweepResult res = q_sweep(kind, n, layouts_for(ctx, kind, n).stem, ctx.tech,
                                     ctx.cal.consts, cfg.q_values);

    Table t{"q_sweep", {"q", "t_init_ps", "i_init_ma", "e_init_fj", "edp_js"}, {}};
    for (const auto& r : res.rows)
        t.add_row({format_number(r.q), format_number(r.t_init / constants::ps),
                   format_number(r.i_init * 1e3), format_number(r.e_init * 1e15),
                   format_number(r.edp)});
    Table s{"q_sweep_summary",
            {"gate", "argmin_q", "t_init_non_increasing", "e_init_non_decreasing"},
            {}};
    s.add_row({cfg.q_gate, format_number(res.argmin_q),
               res.t_init_non_increasing ? "true" : "false",
               res.e_init_non_decreasing ? "true" : "false"});
    rep.tables = {t, s};
    return rep;
}

Report run_adder(const ExperimentConfig& cfg) {
    const Context ctx = make_context(cfg);
    Report rep = base_report(cfg);

    Table steps{"adder_steps", {"scheme", "step", "time_ps"}, {}};
    Table summary{"adder_summary",
                  {"scheme", "delay_ps", "energy_pj", "area_nm2"},
                  {}};
    Table truth{"adder_truth",
                {"a", "b", "c_in", "c_out", "s_out", "conventional", "stem"},
                {}};

    const AdderInstance stem = AdderInstance::build(
        Scheme::Stem, ctx.layouts.adder_stem, ctx.layouts.adder_conv, ctx.tech);
    const AdderInstance conv = AdderInstance::build(
        Scheme::Conventional, ctx.layouts.adder_stem, ctx.layouts.adder_conv, ctx.tech);
    const AdderMetrics ms = adder_metrics(stem, ctx.cal.consts);
    const AdderMetrics mc = adder_metrics(conv, ctx.cal.consts);

    steps.add_row({"stem", "init_carry", format_number(ms.t_init1 / constants::ps)});
    steps.add_row({"stem", "eval_carry", format_number(ms.t_eval1 / constants::ps)});
    steps.add_row({"stem", "init_sum", format_number(ms.t_init2 / constants::ps)});
    steps.add_row({"stem", "eval_sum", format_number(ms.t_eval2 / constants::ps)});
    steps.add_row({"conventional", "stage_carry", format_number(mc.stage1 / constants::ps)});
    steps.add_row({"conventional", "stage_sum", format_number(mc.stage2 / constants::ps)});
    summary.add_row({"stem", format_number(ms.delay / constants::ps),
                     format_number(ms.energy * 1e12), format_number(ms.area)});
    summary.add_row({"conventional", format_number(mc.delay / constants::ps),
                     format_number(mc.energy * 1e12), format_number(mc.area)});

    // exhaustive functional verification of both schemes
    const LogicCircuit stem_circuit = adder_circuit(stem, ctx.cal.consts);
    const LogicCircuit conv_circuit = adder_circuit(conv, ctx.cal.consts);
    const PhaseSchedule stem_sched =
        schedule_adder(ms.t_init1, ms.t_eval1, ms.t_init2, ms.t_eval2);
    std::vector<std::string> violations;
    for (int v = 0; v < 8; ++v) {
        const int a = v & 1, b = (v >> 1) & 1, cin = (v >> 2) & 1;
        const auto [cout, sout] = AdderInstance::truth(a, b, cin);
        const SimResult rs =
            simulate_two_phase(stem_circuit, stem_sched, {a, b, cin}, ctx.cal.consts);
        const SimResult rc = simulate_conventional(conv_circuit, {a, b, cin});
        for (const auto& viol : rs.violations)
            violations.push_back("stem " + viol.vector_label + ": " + viol.message);
        for (const auto& viol : rc.violations)
            violations.push_back("conventional " + viol.vector_label + ": " +
                                 viol.message);
        const bool conv_ok = rc.output(conv_circuit, 0) == cout &&
                             rc.output(conv_circuit, 1) == sout;
        const bool stem_ok = rs.output(stem_circuit, 0) == cout &&
                             rs.output(stem_circuit, 1) == sout;
        truth.add_row({std::to_string(a), std::to_string(b), std::to_string(cin),
                       std::to_string(cout), std::to_string(sout),
                       conv_ok ? "ok" : "MISMATCH", stem_ok ? "ok" : "MISMATCH"});
        if (!conv_ok || !stem_ok)
            violations.push_back("truth-table mismatch at vector " + std::to_string(v));
    }

    rep.tables = {steps, summary, truth};
    rep.artifacts.emplace_back(
        "stem_adder_timing.txt",
        render_timing_diagram(stem_sched, {"c_out", "s_out"}));
    rep.artifacts.emplace_back("stem_adder_schedule.json",
                               schedule_to_json(stem_sched, {"c_out", "s_out"}));
    if (!violations.empty()) {
        std::string all;
        for (const auto& v : violations) all += "\n  " + v;
        throw ProtocolViolation("adder verification failed:" + all);
    }
    return rep;
}

Report run_switching_mc(const ExperimentConfig& cfg) {
    const Context ctx = make_context(cfg);
    Report rep = base_report(cfg);

    // drive currents from the calibrated AND3 layouts
    const GateLayoutPair lp = ctx.layouts.gate("AND3");
    const GateInstance stem_gate =
        GateInstance::build(GateKind::And, Scheme::Stem, 3, lp.stem, ctx.tech);
    const GateInstance conv_gate =
        GateInstance::build(GateKind::And, Scheme::Conventional, 3, lp.conv, ctx.tech);
    const double i_init =
        std::abs(stem_gate.evaluate_phase(Phase::Init, {1, 1, 1}).drive);
    const double i_eval =
        std::abs(stem_gate.evaluate_phase(Phase::Eval, {1, 1, 1}).drive);
    const GateMetrics conv_m = conventional_metrics(conv_gate, ctx.cal.consts);
    const double i_conv = conv_m.i_eval;

    const MacrospinParams mp = cfg.mc.macrospin(ctx.tech.magnet_plan);
    struct Case {
        const char* name;
        double current;
        std::uint64_t seed;
    };
    const std::vector<Case> cases = {{"stem_init", i_init, cfg.seed},
                                     {"stem_eval", i_eval, cfg.seed + 1},
                                     {"conventional", i_conv, cfg.seed + 2}};

    Table pct{"switching_percentiles",
              {"case", "current_ma", "p50_ps", "p90_ps", "p99_ps", "rel_spread",
               "switched", "trials", "seed"},
              {}};
    std::vector<DelayDistribution> dists;
    for (const auto& c : cases) {
        DelayDistribution d = monte_carlo(c.current, mp, cfg.mc.trials, c.seed);
        if (d.switched_trials() == 0)
            throw IntegrationError(std::string("no trial switched for case ") + c.name);
        pct.add_row({c.name, format_number(c.current * 1e3),
                     format_number(d.percentile(50.0) / constants::ps),
                     format_number(d.percentile(90.0) / constants::ps),
                     format_number(d.percentile(99.0) / constants::ps),
                     format_number(d.relative_spread()),
                     std::to_string(d.switched_trials()), std::to_string(cfg.mc.trials),
                     std::to_string(c.seed)});
        dists.push_back(std::move(d));
    }

    Table cmp{"stem_vs_conventional",
              {"stem_p99_sum_ps", "conventional_p99_ps", "ratio"},
              {}};
    const double stem_sum = dists[0].percentile(99.0) + dists[1].percentile(99.0);
    const double conv99 = dists[2].percentile(99.0);
    cmp.add_row({format_number(stem_sum / constants::ps),
                 format_number(conv99 / constants::ps),
                 format_number(conv99 / stem_sum)});

    rep.tables = {pct, cmp};
    for (size_t i = 0; i < cases.size(); ++i) {
        std::ostringstream csv;
        csv << "time_ps,probability\n";
        const auto& times = dists[i].times();
        for (size_t k = 0; k < times.size(); ++k)
            csv << format_number(times[k] / constants::ps) << ","
                << format_number(static_cast<double>(k + 1) / dists[i].total_trials())
                << "\n";
        rep.artifacts.emplace_back(std::string("cdf_") + cases[i].name + ".csv",
                                   csv.str());
    }
    return rep;
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg) {
    if (cfg.experiment == "compare_gates") return run_compare_gates(cfg);
    if (cfg.experiment == "q_sweep") return run_q_sweep(cfg);
    if (cfg.experiment == "adder") return run_adder(cfg);
    if (cfg.experiment == "switching_mc") return run_switching_mc(cfg);
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
}

}  // namespace aslsim
