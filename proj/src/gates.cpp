#include "aslsim/gates.hpp"

#include <algorithm>
#include <cmath>

#include "aslsim/errors.hpp"
#include "aslsim/nodal.hpp"

namespace aslsim {

std::string to_string(GateKind k) {
    switch (k) {
        case GateKind::Inv: return "INV";
        case GateKind::Buf: return "BUF";
        case GateKind::Maj: return "MAJ";
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Nand: return "NAND";
        case GateKind::Nor: return "NOR";
    }
    return "?";
}

std::string to_string(Scheme s) {
    return s == Scheme::Conventional ? "conventional" : "stem";
}

GateKind gate_kind_from_string(const std::string& s) {
    if (s == "INV") return GateKind::Inv;
    if (s == "BUF") return GateKind::Buf;
    if (s == "MAJ") return GateKind::Maj;
    if (s == "AND") return GateKind::And;
    if (s == "OR") return GateKind::Or;
    if (s == "NAND") return GateKind::Nand;
    if (s == "NOR") return GateKind::Nor;
    throw LayoutError("unknown gate kind '" + s + "'");
}

int boolean_reference(GateKind kind, const std::vector<int>& inputs) {
    const int n = static_cast<int>(inputs.size());
    int ones = 0;
    for (int v : inputs) ones += v ? 1 : 0;
    switch (kind) {
        case GateKind::Inv: return inputs.at(0) ? 0 : 1;
        case GateKind::Buf: return inputs.at(0) ? 1 : 0;
        case GateKind::Maj: return 2 * ones > n ? 1 : 0;
        case GateKind::And: return ones == n ? 1 : 0;
        case GateKind::Or: return ones > 0 ? 1 : 0;
        case GateKind::Nand: return ones == n ? 0 : 1;
        case GateKind::Nor: return ones > 0 ? 0 : 1;
    }
    return 0;
}

namespace detail {

class StampedNetwork {
public:
    explicit StampedNetwork(SpinNetlist net) : net_(std::move(net)) {
        NodalSystem sys = assemble(net_);
        G_ = std::move(sys.G);
        lu_.compute(G_);
        rcond_ = lu_.rcond();
        if (!(rcond_ > 1e-14))
            throw SolverError("gate network is ill-conditioned", rcond_);
    }

    const SpinNetlist& netlist() const { return net_; }

    Solution solve_sources(const std::vector<std::pair<int, double>>& values) const {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(G_.rows());
        for (const auto& [node, v] : values) rhs(2 * node) = v;
        Solution sol;
        sol.potentials = lu_.solve(rhs);
        for (int round = 0; round < 2; ++round) {
            const Eigen::VectorXd r = rhs - G_ * sol.potentials;
            sol.potentials += lu_.solve(r);
        }
        const double scale = G_.norm() * sol.potentials.norm() + rhs.norm();
        const double res = (G_ * sol.potentials - rhs).norm();
        sol.residual = scale > 0.0 ? res / scale : res;
        if (!(sol.residual <= 1e-9) || !sol.potentials.allFinite())
            throw SolverError("gate solve residual too large", rcond_);
        sol.branches = branch_currents(net_, sol.potentials);
        return sol;
    }

private:
    SpinNetlist net_;
    Eigen::MatrixXd G_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double rcond_ = 0.0;
};

}  // namespace detail

GateInstance::GateInstance() = default;
GateInstance::~GateInstance() = default;
GateInstance::GateInstance(GateInstance&&) noexcept = default;
GateInstance& GateInstance::operator=(GateInstance&&) noexcept = default;

bool GateInstance::stage_inverted() const {
    return kind_ == GateKind::Inv || kind_ == GateKind::Nand || kind_ == GateKind::Nor;
}

int GateInstance::live_branch_count() const {
    int c = 0;
    for (const auto& b : branches_)
        if (b.role == BranchRole::Live) ++c;
    return c;
}

int GateInstance::fixed_branch_count() const {
    int c = 0;
    for (const auto& b : branches_)
        if (b.role == BranchRole::Fixed) ++c;
    return c;
}

int GateInstance::input_magnet_count() const {
    return static_cast<int>(branches_.size());
}

namespace {

int fixed_level(GateKind kind) {
    // AND-family majorities are biased by fixed zeros, OR-family by fixed ones
    switch (kind) {
        case GateKind::And:
        case GateKind::Nand: return 0;
        case GateKind::Or:
        case GateKind::Nor: return 1;
        default: return 0;
    }
}

}  // namespace

GateInstance GateInstance::build(GateKind kind, Scheme scheme, int n,
                                 const StarLayout& layout, const TechParams& tech,
                                 double init_scale_q) {
    tech.validate();
    if (n < 1) throw LayoutError("gate fan-in must be >= 1");
    if (kind == GateKind::Inv || kind == GateKind::Buf) {
        if (n != 1) throw LayoutError("INV/BUF take exactly one input");
    } else if (kind == GateKind::Maj) {
        if (n % 2 == 0) throw LayoutError("MAJ requires odd fan-in, got k=" +
                                          std::to_string(n));
        if (n < 3) throw LayoutError("MAJ requires k >= 3");
    } else if (n < 2) {
        throw LayoutError(to_string(kind) + " requires n >= 2");
    }
    if (!(init_scale_q >= 1.0))
        throw LayoutError("init magnet scale Q must be >= 1");
    if (!(layout.arm > 0.0)) throw LayoutError("gate layout: arm length must be > 0");

    GateInstance g;
    g.kind_ = kind;
    g.scheme_ = scheme;
    g.n_ = n;
    g.q_ = init_scale_q;
    g.tech_ = tech;
    g.layout_ = layout;

    // branch plan
    struct Plan {
        BranchRole role;
        int input_index;
        int fixed_value;
        double arm;
        double q;
    };
    std::vector<Plan> plan;
    const bool maj_like = (kind == GateKind::Maj);
    if (scheme == Scheme::Conventional) {
        int live = n;
        for (int i = 0; i < live; ++i)
            plan.push_back({BranchRole::Live, i, 0, layout.arm, 1.0});
        if (kind == GateKind::And || kind == GateKind::Or || kind == GateKind::Nand ||
            kind == GateKind::Nor) {
            for (int i = 0; i < n - 1; ++i)
                plan.push_back({BranchRole::Fixed, -1, fixed_level(kind), layout.arm, 1.0});
        }
    } else {
        if (!(layout.init_arm > 0.0))
            throw LayoutError("stem layout: init arm length must be > 0");
        if (maj_like) {
            // input 0 is transferred during initialization, the rest evaluate
            for (int i = 1; i < n; ++i)
                plan.push_back({BranchRole::Live, i, 0, layout.arm, 1.0});
            plan.push_back({BranchRole::Init, 0, 0, layout.init_arm, init_scale_q});
        } else {
            for (int i = 0; i < n; ++i)
                plan.push_back({BranchRole::Live, i, 0, layout.arm, 1.0});
            plan.push_back({BranchRole::Init, -1, fixed_level(kind), layout.init_arm,
                            init_scale_q});
        }
    }

    SpinNetlist net;
    const int gnd = net.add_node("gnd");
    net.add_ground(gnd);
    const int junction = net.add_node("junction");
    int out_contact_node = junction;
    if (layout.trunk > 0.0) {
        out_contact_node = net.add_node("out_contact");
        net.add_element(ElementKind::NM, tech.ch, tech.channel_element(layout.trunk),
                        junction, out_contact_node, "trunk");
    }
    const int out_top = net.add_node("out_top");
    net.add_ground(out_top);
    net.add_element(ElementKind::FM, tech.fm, tech.magnet_element(), out_contact_node,
                    out_top, "out");
    g.output_element_ = net.element_index("out");

    int bi = 0;
    for (const auto& p : plan) {
        const std::string tag = std::to_string(bi);
        const int src = net.add_node("src" + tag);
        const int contact = net.add_node("c" + tag);
        net.add_element(ElementKind::FM, tech.fm, tech.magnet_element(p.q), src,
                        contact, "fm" + tag);
        if (layout.tap > 0.0)
            net.add_element(ElementKind::NM, tech.ch,
                            tech.channel_element(layout.tap, p.q), contact, gnd,
                            "tap" + tag);
        net.add_element(ElementKind::NM, tech.ch, tech.channel_element(p.arm), contact,
                        junction, "arm" + tag);
        net.add_source(src, 0.0);
        Branch b;
        b.role = p.role;
        b.input_index = p.input_index;
        b.fixed_value = p.fixed_value;
        b.source_node = src;
        b.fm_element = net.element_index("fm" + tag);
        g.branches_.push_back(b);
        ++bi;
    }

    g.network_ = std::make_unique<detail::StampedNetwork>(std::move(net));
    return g;
}

const SpinNetlist& GateInstance::netlist() const { return network_->netlist(); }

int GateInstance::boolean_output(const std::vector<int>& inputs) const {
    if (static_cast<int>(inputs.size()) != n_)
        throw LayoutError("gate expects " + std::to_string(n_) + " inputs");
    return boolean_reference(kind_, inputs);
}

int GateInstance::init_value(const std::vector<int>& inputs) const {
    if (scheme_ != Scheme::Stem)
        throw LayoutError("init_value is defined for STEM gates only");
    int raw;
    if (kind_ == GateKind::Maj) raw = inputs.at(0);
    else raw = fixed_level(kind_);
    return stage_inverted() ? 1 - raw : raw;
}

std::vector<int> GateInstance::eval_inputs(const std::vector<int>& inputs) const {
    if (kind_ == GateKind::Maj && scheme_ == Scheme::Stem)
        return {inputs.begin() + 1, inputs.end()};
    return inputs;
}

namespace {

// supply polarity encoding one logic value; the gate-level convention is
// fixed once: a non-inverting stage drives logic 1 with -V_dd
double drive_voltage(int value, bool inverted, double vdd) {
    const double m = value ? 1.0 : -1.0;
    return (inverted ? +1.0 : -1.0) * m * vdd;
}

}  // namespace

std::vector<double> GateInstance::phase_voltages(Phase phase,
                                                 const std::vector<int>& inputs) const {
    if (static_cast<int>(inputs.size()) != n_)
        throw LayoutError("gate expects " + std::to_string(n_) + " inputs");
    const bool inv = stage_inverted();
    std::vector<double> volts(branches_.size(), 0.0);
    for (size_t i = 0; i < branches_.size(); ++i) {
        const Branch& b = branches_[i];
        int value = 0;
        bool driven = false;
        if (scheme_ == Scheme::Conventional) {
            if (phase == Phase::Init)
                throw LayoutError("conventional gates have no init phase");
            driven = true;
            value = b.role == BranchRole::Live ? inputs[b.input_index] : b.fixed_value;
        } else if (phase == Phase::Init) {
            if (b.role == BranchRole::Init) {
                driven = true;
                value = b.input_index >= 0 ? inputs[b.input_index] : b.fixed_value;
            }
        } else {  // STEM eval
            if (b.role == BranchRole::Live) {
                driven = true;
                value = inputs[b.input_index];
            }
        }
        if (driven) volts[i] = drive_voltage(value, inv, tech_.vdd);
    }
    return volts;
}

PhaseResult GateInstance::solve_with(const std::vector<double>& branch_volts) const {
    std::vector<std::pair<int, double>> sources;
    sources.reserve(branches_.size());
    for (size_t i = 0; i < branches_.size(); ++i)
        sources.emplace_back(branches_[i].source_node, branch_volts[i]);
    const Solution sol = network_->solve_sources(sources);

    PhaseResult r;
    // positive = into the grounded output magnet, polarized toward logic 1
    r.drive = -sol.branches[output_element_].spin;
    for (size_t i = 0; i < branches_.size(); ++i) {
        if (branch_volts[i] != 0.0) {
            r.charge += std::abs(sol.branches[branches_[i].fm_element].charge);
            r.vote += branch_volts[i] < 0.0 ? 1 : -1;
        }
    }
    return r;
}

PhaseResult GateInstance::evaluate_phase(Phase phase,
                                         const std::vector<int>& inputs) const {
    if (scheme_ == Scheme::Conventional && phase == Phase::Init)
        throw LayoutError("conventional gates have no init phase");
    return solve_with(phase_voltages(phase, inputs));
}

PhaseResult GateInstance::evaluate_conventional(const std::vector<int>& inputs) const {
    if (scheme_ != Scheme::Conventional)
        throw LayoutError("evaluate_conventional on a STEM gate");
    return solve_with(phase_voltages(Phase::Eval, inputs));
}

double GateInstance::unit_current() const {
    std::vector<double> volts(branches_.size(), 0.0);
    for (size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].role == BranchRole::Live) {
            volts[i] = drive_voltage(1, false, tech_.vdd);
            break;
        }
    }
    return std::abs(solve_with(volts).drive);
}

double GateInstance::init_unit_current() const {
    std::vector<double> volts(branches_.size(), 0.0);
    bool found = false;
    for (size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].role == BranchRole::Init) {
            volts[i] = drive_voltage(1, false, tech_.vdd);
            found = true;
            break;
        }
    }
    if (!found) throw LayoutError("gate has no init branch");
    return std::abs(solve_with(volts).drive);
}

std::vector<double> GateInstance::per_branch_drives(
    Phase phase, const std::vector<int>& inputs) const {
    const std::vector<double> volts = phase_voltages(phase, inputs);
    std::vector<double> out(branches_.size(), 0.0);
    for (size_t i = 0; i < branches_.size(); ++i) {
        if (volts[i] == 0.0) continue;
        std::vector<double> one(branches_.size(), 0.0);
        one[i] = volts[i];
        out[i] = solve_with(one).drive;
    }
    return out;
}

double GateInstance::footprint_area() const {
    const Geometry& m = tech_.magnet_plan;
    double area = m.footprint();  // output magnet
    for (const auto& b : branches_) {
        const double q = b.role == BranchRole::Init ? q_ : 1.0;
        area += m.length * (m.width * q);
        if (layout_.tap > 0.0) area += layout_.tap * (tech_.channel_width * q);
        const double arm = b.role == BranchRole::Init ? layout_.init_arm : layout_.arm;
        area += arm * tech_.channel_width;
    }
    if (layout_.trunk > 0.0) area += layout_.trunk * tech_.channel_width;
    return area;
}

GateLayoutPair layouts_for_gate(const LayoutLibrary& lib, GateKind kind, int n) {
    std::string key;
    switch (kind) {
        case GateKind::Inv:
        case GateKind::Buf: {
            GateLayoutPair p;
            p.conv = lib.reference;
            p.stem = lib.reference;
            p.stem.init_arm = lib.reference.arm;
            return p;
        }
        case GateKind::Maj: key = "MAJ" + std::to_string(n); break;
        case GateKind::And:
        case GateKind::Nand:
        case GateKind::Or:
        case GateKind::Nor: key = "AND" + std::to_string(n); break;
    }
    return lib.gate(key);
}

int stem_weakest_must_switch_vote(GateKind kind, int n) {
    switch (kind) {
        case GateKind::Inv:
        case GateKind::Buf: return 1;
        case GateKind::Maj: return 2;  // k-1 eval inputs, majority margin 2
        case GateKind::And:
        case GateKind::Or:
        case GateKind::Nand:
        case GateKind::Nor: return n;  // only the all-agree vector switches
    }
    return 0;
}

int stem_strongest_must_not_switch_vote(GateKind kind, int n) {
    switch (kind) {
        case GateKind::Inv:
        case GateKind::Buf:
        case GateKind::Maj: return 0;  // eval pulse unconstrained from above
        case GateKind::And:
        case GateKind::Or:
        case GateKind::Nand:
        case GateKind::Nor: return n >= 3 ? n - 2 : 0;
    }
    return 0;
}

}  // namespace aslsim
