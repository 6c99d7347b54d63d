#include "aslsim/layouts.hpp"

#include <fstream>
#include <sstream>

#include "aslsim/constants.hpp"
#include "aslsim/errors.hpp"

namespace aslsim {

TechParams TechParams::table_defaults() {
    TechParams t;
    t.fm = {defaults::fm_resistivity, defaults::fm_spin_flip_length,
            defaults::spin_polarization, defaults::series_polarization};
    t.ch = {defaults::nm_resistivity, defaults::nm_spin_flip_length, 0.0, 0.0};
    t.magnet_plan = {defaults::magnet_length, defaults::magnet_width,
                     defaults::magnet_thickness};
    t.channel_width = defaults::channel_width;
    t.channel_thickness = defaults::channel_thickness;
    t.vdd = defaults::supply_voltage;
    t.ms_emu_cc = defaults::saturation_magnetization;
    return t;
}

Geometry TechParams::magnet_element(double q) const {
    return {magnet_plan.thickness, magnet_plan.length, magnet_plan.width * q};
}

Geometry TechParams::channel_element(double length_nm, double q) const {
    return {length_nm, channel_width * q, channel_thickness};
}

double TechParams::magnet_moments() const {
    const double ms_si = ms_emu_cc * constants::emu_cc_to_A_m;
    return ms_si * magnet_plan.volume() * constants::nm3_to_m3 /
           constants::bohr_magneton;
}

void TechParams::validate() const {
    fm.validate();
    ch.validate();
    magnet_plan.validate();
    if (!(channel_width > 0.0) || !(channel_thickness > 0.0))
        throw ParameterError("tech: channel cross-section must be positive");
    if (!(vdd > 0.0)) throw ParameterError("tech: vdd must be positive");
    if (!(ms_emu_cc > 0.0)) throw ParameterError("tech: Ms must be positive");
}

LayoutLibrary LayoutLibrary::calibrated_defaults() {
    LayoutLibrary lib;
    lib.reference = {100.0, 0.0, 12.1658, 0.0};
    lib.gates["AND2"] = {{627.15, 0.0, 92.84, 134.12},
                         {858.61, 271.05, 53.28, 0.0}};
    lib.gates["AND3"] = {{891.51, 0.0, 192.03, 239.37},
                         {2336.63, 282.28, 44.60, 0.0}};
    lib.gates["AND4"] = {{1625.85, 0.0, 56.89, 102.04},
                         {2214.75, 294.44, 42.07, 0.0}};
    // MAJ3 is electrically the AND2 structure (3 symmetric inputs)
    lib.gates["MAJ3"] = lib.gates["AND2"];
    lib.gates["MAJ5"] = {{889.11, 0.0, 93.62, 204.12},
                         {1457.96, 285.03, 41.54, 0.0}};
    lib.adder_stem = {122.3524, 227.7356, 1.0, 104.7528, 16.0478,
                      36.7012, 7.0674, 10.709, 10.7534};
    lib.adder_conv = {101.56, 183.72, 291.76, 11.42, 175.07};
    return lib;
}

const GateLayoutPair& LayoutLibrary::gate(const std::string& key) const {
    auto it = gates.find(key);
    if (it == gates.end()) throw LayoutError("no calibrated layout for gate " + key);
    return it->second;
}

namespace {

double kv_num(std::map<std::string, std::string>& kv, const std::string& key,
              double fallback, const std::string& ctx) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        double v = std::stod(it->second);
        kv.erase(it);
        return v;
    } catch (...) {
        throw ConfigError(ctx + ": field '" + key + "' is not a number");
    }
}

}  // namespace

LayoutLibrary load_layout_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path + ": cannot open layout file");
    LayoutLibrary lib = LayoutLibrary::calibrated_defaults();

    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::string ctx = path + ":" + std::to_string(lineno);
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        std::map<std::string, std::string> kv;
        std::string tok;
        while (ss >> tok) {
            if (tok[0] == '#') break;
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw ConfigError(ctx + ": expected key=value, got '" + tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        if (head == "reference") {
            lib.reference.arm = kv_num(kv, "arm", lib.reference.arm, ctx);
            lib.reference.tap = kv_num(kv, "tap", lib.reference.tap, ctx);
        } else if (head == "gate") {
            auto name_it = kv.find("name");
            if (name_it == kv.end()) throw ConfigError(ctx + ": gate needs name=...");
            GateLayoutPair& g = lib.gates[name_it->second];
            kv.erase(name_it);
            g.conv.arm = kv_num(kv, "conv_arm", g.conv.arm, ctx);
            g.conv.tap = kv_num(kv, "conv_tap", g.conv.tap, ctx);
            g.conv.trunk = kv_num(kv, "conv_trunk", g.conv.trunk, ctx);
            g.stem.arm = kv_num(kv, "stem_arm", g.stem.arm, ctx);
            g.stem.init_arm = kv_num(kv, "stem_init", g.stem.init_arm, ctx);
            g.stem.tap = kv_num(kv, "stem_tap", g.stem.tap, ctx);
            g.stem.trunk = kv_num(kv, "stem_trunk", g.stem.trunk, ctx);
        } else if (head == "adder_stem") {
            auto& a = lib.adder_stem;
            a.arm_a = kv_num(kv, "arm_a", a.arm_a, ctx);
            a.arm_bc = kv_num(kv, "arm_bc", a.arm_bc, ctx);
            a.trunk_mid = kv_num(kv, "trunk_mid", a.trunk_mid, ctx);
            a.trunk_out = kv_num(kv, "trunk_out", a.trunk_out, ctx);
            a.spur_offset = kv_num(kv, "spur_offset", a.spur_offset, ctx);
            a.spur = kv_num(kv, "spur", a.spur, ctx);
            a.tap_a = kv_num(kv, "tap_a", a.tap_a, ctx);
            a.tap_bc = kv_num(kv, "tap_bc", a.tap_bc, ctx);
            a.tap_carry = kv_num(kv, "tap_carry", a.tap_carry, ctx);
        } else if (head == "adder_conv") {
            auto& a = lib.adder_conv;
            a.arm_in = kv_num(kv, "arm_in", a.arm_in, ctx);
            a.carry_spur = kv_num(kv, "carry_spur", a.carry_spur, ctx);
            a.trunk = kv_num(kv, "trunk", a.trunk, ctx);
            a.tap_in = kv_num(kv, "tap_in", a.tap_in, ctx);
            a.tap_carry = kv_num(kv, "tap_carry", a.tap_carry, ctx);
        } else {
            throw ConfigError(ctx + ": unknown directive '" + head + "'");
        }
        if (!kv.empty())
            throw ConfigError(ctx + ": unknown field '" + kv.begin()->first + "'");
    }
    return lib;
}

}  // namespace aslsim
