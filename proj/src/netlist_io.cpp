#include "aslsim/netlist_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "aslsim/errors.hpp"

namespace aslsim {

namespace {

struct LineCtx {
    const std::string& origin;
    int line;
    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
    }
};

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

// key=value pairs after the positional tokens
std::map<std::string, std::string> keyvals(const std::vector<std::string>& toks,
                                           size_t first, const LineCtx& ctx) {
    std::map<std::string, std::string> kv;
    for (size_t i = first; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= toks[i].size())
            ctx.fail("expected key=value, got '" + toks[i] + "'");
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return kv;
}

double num(const std::map<std::string, std::string>& kv, const std::string& key,
           const LineCtx& ctx) {
    auto it = kv.find(key);
    if (it == kv.end()) ctx.fail("missing required field '" + key + "'");
    try {
        size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        ctx.fail("field '" + key + "': '" + it->second + "' is not a number");
    }
}

double num_or(const std::map<std::string, std::string>& kv, const std::string& key,
              double dflt, const LineCtx& ctx) {
    return kv.count(key) ? num(kv, key, ctx) : dflt;
}

}  // namespace

LoadedNetlist load_netlist(std::istream& in, const std::string& origin) {
    LoadedNetlist out;
    std::map<std::string, std::pair<ElementKind, MaterialParams>> materials;

    auto node_of = [&](const std::string& name) {
        auto it = out.node_ids.find(name);
        if (it != out.node_ids.end()) return it->second;
        int id = out.netlist.add_node(name);
        out.node_ids[name] = id;
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineCtx ctx{origin, lineno};
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& cmd = toks[0];

        if (cmd == "material") {
            if (toks.size() < 2) ctx.fail("material needs a name");
            auto kv = keyvals(toks, 2, ctx);
            auto kind_it = kv.find("kind");
            if (kind_it == kv.end()) ctx.fail("material: missing field 'kind'");
            ElementKind kind;
            if (kind_it->second == "fm") kind = ElementKind::FM;
            else if (kind_it->second == "nm") kind = ElementKind::NM;
            else ctx.fail("material: kind must be fm or nm");
            MaterialParams m;
            m.rho = num(kv, "rho", ctx);
            m.lambda_sf = num(kv, "lambda", ctx);
            m.p = num_or(kv, "p", 0.0, ctx);
            m.beta = num_or(kv, "beta", m.p, ctx);
            try {
                m.validate();
            } catch (const ParameterError& e) {
                ctx.fail(e.what());
            }
            for (const auto& [k, _] : kv)
                if (k != "kind" && k != "rho" && k != "lambda" && k != "p" && k != "beta")
                    ctx.fail("material: unknown field '" + k + "'");
            materials[toks[1]] = {kind, m};
        } else if (cmd == "elem") {
            if (toks.size() < 4) ctx.fail("elem needs: name nodeP nodeQ key=value...");
            auto kv = keyvals(toks, 4, ctx);
            auto mat_it = kv.find("mat");
            if (mat_it == kv.end()) ctx.fail("elem: missing field 'mat'");
            auto m = materials.find(mat_it->second);
            if (m == materials.end())
                ctx.fail("elem: unknown material '" + mat_it->second + "'");
            Geometry g;
            g.length = num(kv, "L", ctx);
            g.width = num(kv, "w", ctx);
            g.thickness = num(kv, "t", ctx);
            double msign = num_or(kv, "msign", 1.0, ctx);
            if (msign != 1.0 && msign != -1.0) ctx.fail("elem: msign must be +1 or -1");
            if (m->second.first == ElementKind::NM && kv.count("msign"))
                ctx.fail("elem: msign is only meaningful for fm elements");
            try {
                g.validate();
                if (m->second.first == ElementKind::FM)
                    fm_stamp(m->second.second, g, msign);
                else
                    nm_stamp(m->second.second, g);
            } catch (const ParameterError& e) {
                ctx.fail(e.what());
            }
            for (const auto& [k, _] : kv)
                if (k != "mat" && k != "L" && k != "w" && k != "t" && k != "msign")
                    ctx.fail("elem: unknown field '" + k + "'");
            out.netlist.add_element(m->second.first, m->second.second, g,
                                    node_of(toks[1 + 1]), node_of(toks[2 + 1]),
                                    toks[1], msign);
        } else if (cmd == "source") {
            if (toks.size() != 3) ctx.fail("source needs: node volts");
            try {
                out.netlist.add_source(node_of(toks[1]), std::stod(toks[2]));
            } catch (const ConfigError&) {
                throw;
            } catch (...) {
                ctx.fail("source: '" + toks[2] + "' is not a number");
            }
        } else if (cmd == "ground") {
            if (toks.size() != 2) ctx.fail("ground needs: node");
            out.netlist.add_ground(node_of(toks[1]));
        } else {
            ctx.fail("unknown directive '" + cmd + "'");
        }
    }

    try {
        out.netlist.validate();
    } catch (const AssemblyError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return out;
}

LoadedNetlist load_netlist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path + ": cannot open file");
    return load_netlist(f, path);
}

}  // namespace aslsim
