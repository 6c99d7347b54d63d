#include "aslsim/adder.hpp"

#include <cmath>
#include <string>

#include "aslsim/errors.hpp"
#include "aslsim/nodal.hpp"

namespace aslsim {

namespace {

double drive_voltage(int value, bool inverted, double vdd) {
    const double m = value ? 1.0 : -1.0;
    return (inverted ? +1.0 : -1.0) * m * vdd;
}

// Assembled tree with a fixed constraint set; only source values vary.
class Network {
public:
    Network() = default;
    void init(SpinNetlist net) {
        net_ = std::move(net);
        NodalSystem sys = assemble(net_);
        G_ = std::move(sys.G);
        lu_.compute(G_);
        if (!(lu_.rcond() > 1e-14))
            throw SolverError("adder network is ill-conditioned", lu_.rcond());
    }
    Solution solve(const std::vector<std::pair<int, double>>& src) const {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(G_.rows());
        for (const auto& [node, v] : src) rhs(2 * node) = v;
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
            throw SolverError("adder solve residual too large", lu_.rcond());
        sol.branches = branch_currents(net_, sol.potentials);
        return sol;
    }
    const SpinNetlist& net() const { return net_; }

private:
    SpinNetlist net_;
    Eigen::MatrixXd G_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace

struct AdderInstance::Impl {
    // two constraint configurations of the same element tree:
    //  write_carry: c_out top is a grounded write target
    //  drive_carry: c_out top is a charge source (driving or idle)
    Network write_carry;
    Network drive_carry;
    int src_a = -1, src_b = -1, src_c = -1, src_carry = -1;
    int fm_a = -1, fm_b = -1, fm_c = -1, fm_carry = -1, fm_sum = -1;
    double channel_sum = 0.0;  // nm, for footprint
    double strap_area = 0.0;   // nm^2, taps can differ per branch

    Solution run(bool carry_is_source, double va, double vb, double vc,
                 double vcarry) const {
        std::vector<std::pair<int, double>> src = {
            {src_a, va}, {src_b, vb}, {src_c, vc}};
        if (carry_is_source) {
            src.emplace_back(src_carry, vcarry);
            return drive_carry.solve(src);
        }
        return write_carry.solve(src);
    }
};

AdderInstance::AdderInstance() = default;
AdderInstance::~AdderInstance() = default;
AdderInstance::AdderInstance(AdderInstance&&) noexcept = default;
AdderInstance& AdderInstance::operator=(AdderInstance&&) noexcept = default;

std::pair<int, int> AdderInstance::truth(int a, int b, int cin) {
    const int ones = (a ? 1 : 0) + (b ? 1 : 0) + (cin ? 1 : 0);
    return {ones >= 2 ? 1 : 0, ones % 2};
}

AdderInstance AdderInstance::build(Scheme scheme, const StemAdderLayout& stem,
                                   const ConvAdderLayout& conv,
                                   const TechParams& tech, double balance_tolerance) {
    tech.validate();
    if (scheme == Scheme::Stem) {
        if (!(stem.arm_a > 0.0 && stem.arm_bc > 0.0 && stem.trunk_out > 0.0 &&
              stem.spur > 0.0))
            throw LayoutError("stem adder layout: segment lengths must be > 0");
        if (!(stem.spur_offset >= 0.0 && stem.spur_offset < stem.arm_a))
            throw LayoutError("stem adder layout: spur offset must lie on input a's arm");
    } else {
        if (!(conv.arm_in > 0.0 && conv.carry_spur > 0.0 && conv.trunk > 0.0))
            throw LayoutError("conventional adder layout: segment lengths must be > 0");
    }
    AdderInstance ad;
    ad.scheme_ = scheme;
    ad.tech_ = tech;
    ad.stem_layout_ = stem;
    ad.conv_layout_ = conv;
    ad.impl_ = std::make_unique<Impl>();
    Impl& im = *ad.impl_;

    SpinNetlist net;
    const int gnd = net.add_node("gnd");
    net.add_ground(gnd);

    auto channel = [&](int p, int q, double len, const std::string& name) {
        if (len > 0.0)
            net.add_element(ElementKind::NM, tech.ch, tech.channel_element(len), p, q,
                            name);
        im.channel_sum += len;
    };
    auto magnet = [&](int contact, int top, const std::string& name) {
        net.add_element(ElementKind::FM, tech.fm, tech.magnet_element(), contact, top,
                        name);
    };
    auto strap = [&](int contact, double len, const std::string& name) {
        if (len > 0.0) {
            net.add_element(ElementKind::NM, tech.ch, tech.channel_element(len),
                            contact, gnd, name);
            im.strap_area += len * tech.channel_width;
        }
    };

    const int ca = net.add_node("ca"), cb = net.add_node("cb"), cc = net.add_node("cc");
    const int sa = net.add_node("sa"), sb = net.add_node("sb"), sc = net.add_node("sc");
    const int carry_contact = net.add_node("carry_contact");
    const int carry_top = net.add_node("carry_top");
    const int sum_junction = net.add_node("sum_junction");
    const int sum_top = net.add_node("sum_top");
    net.add_ground(sum_top);

    magnet(sa, ca, "fm_a");
    magnet(sb, cb, "fm_b");
    magnet(sc, cc, "fm_c");
    magnet(carry_contact, carry_top, "fm_carry");
    magnet(sum_junction, sum_top, "fm_sum");

    if (scheme == Scheme::Stem) {
        // b, c_in merge at M; trunk M -> Pa -> sum; a joins at Pa through its
        // own arm; the carry magnet taps a's arm at the spur junction
        const int merge = net.add_node("merge");
        const int a_join = net.add_node("a_join");
        const int spur_junction = net.add_node("spur_junction");
        channel(cb, merge, stem.arm_bc, "arm_b");
        channel(cc, merge, stem.arm_bc, "arm_c");
        channel(merge, a_join, stem.trunk_mid, "trunk_mid");
        channel(ca, spur_junction, stem.arm_a - stem.spur_offset, "arm_a");
        channel(spur_junction, a_join, stem.spur_offset, "arm_a_join");
        channel(spur_junction, carry_contact, stem.spur, "carry_spur");
        channel(a_join, sum_junction, stem.trunk_out, "trunk_out");
        strap(ca, stem.tap_a, "tap_a");
        strap(cb, stem.tap_bc, "tap_b");
        strap(cc, stem.tap_bc, "tap_c");
        strap(carry_contact, stem.tap_carry, "tap_carry");
    } else {
        const int j1 = net.add_node("carry_junction");
        channel(ca, j1, conv.arm_in, "arm_a");
        channel(cb, j1, conv.arm_in, "arm_b");
        channel(cc, j1, conv.arm_in, "arm_c");
        channel(j1, carry_contact, conv.carry_spur, "carry_spur");
        channel(j1, sum_junction, conv.trunk, "trunk");
        strap(ca, conv.tap_in, "tap_a");
        strap(cb, conv.tap_in, "tap_b");
        strap(cc, conv.tap_in, "tap_c");
        strap(carry_contact, conv.tap_carry, "tap_carry");
    }

    net.add_source(sa, 0.0);
    net.add_source(sb, 0.0);
    net.add_source(sc, 0.0);
    im.src_a = sa;
    im.src_b = sb;
    im.src_c = sc;
    im.src_carry = carry_top;
    im.fm_a = net.element_index("fm_a");
    im.fm_b = net.element_index("fm_b");
    im.fm_c = net.element_index("fm_c");
    im.fm_carry = net.element_index("fm_carry");
    im.fm_sum = net.element_index("fm_sum");

    SpinNetlist writing = net;
    writing.add_ground(carry_top);
    im.write_carry.init(std::move(writing));

    SpinNetlist driving = net;
    driving.add_source(carry_top, 0.0);
    im.drive_carry.init(std::move(driving));

    // layout sanity: the three input couplings into s_out must match, and a
    // conventional carry must contribute exactly two input units
    const double ua = ad.unit_input_to_sum();
    const double ub = ad.unit_input_b_to_sum();
    if (std::abs(ua - ub) > balance_tolerance * std::max(ua, ub))
        throw LayoutError("adder layout: unbalanced input paths to s_out (" +
                          std::to_string(ua) + " vs " + std::to_string(ub) + ")");
    if (scheme == Scheme::Conventional) {
        const double ucarry = ad.unit_carry_to_sum();
        if (std::abs(ucarry - 2.0 * ua) > balance_tolerance * 2.0 * ua)
            throw LayoutError(
                "adder layout: carry path must contribute two input units, got " +
                std::to_string(ucarry / ua));
    }
    return ad;
}

PhaseResult AdderInstance::step(AdderStep s, int a, int b, int cin,
                                int carry_state) const {
    if (scheme_ != Scheme::Stem)
        throw LayoutError("step() applies to the STEM adder; use stage_*()");
    const Impl& im = *impl_;
    const double vdd = tech_.vdd;
    PhaseResult r;
    Solution sol;
    switch (s) {
        case AdderStep::InitCarry: {
            const double va = drive_voltage(a, false, vdd);
            sol = im.run(false, va, 0.0, 0.0, 0.0);
            r.drive = -sol.branches[im.fm_carry].spin;
            r.charge = std::abs(sol.branches[im.fm_a].charge);
            r.vote = a ? 1 : -1;
            return r;
        }
        case AdderStep::EvalCarry: {
            const double vb = drive_voltage(b, false, vdd);
            const double vc = drive_voltage(cin, false, vdd);
            sol = im.run(false, 0.0, vb, vc, 0.0);
            r.drive = -sol.branches[im.fm_carry].spin;
            r.charge = std::abs(sol.branches[im.fm_b].charge) +
                       std::abs(sol.branches[im.fm_c].charge);
            r.vote = (b ? 1 : -1) + (cin ? 1 : -1);
            return r;
        }
        case AdderStep::InitSum: {
            // c_out transfers its complement, so it drives inverted
            const double vcarry = drive_voltage(carry_state, true, vdd);
            sol = im.run(true, 0.0, 0.0, 0.0, vcarry);
            r.drive = -sol.branches[im.fm_sum].spin;
            // current measured at the contact side of the carry stack
            r.charge = std::abs(sol.branches[im.fm_carry].charge);
            r.vote = carry_state ? -1 : 1;
            return r;
        }
        case AdderStep::EvalSum: {
            const double va = drive_voltage(a, false, vdd);
            const double vb = drive_voltage(b, false, vdd);
            const double vc = drive_voltage(cin, false, vdd);
            sol = im.run(true, va, vb, vc, 0.0);
            r.drive = -sol.branches[im.fm_sum].spin;
            r.charge = std::abs(sol.branches[im.fm_a].charge) +
                       std::abs(sol.branches[im.fm_b].charge) +
                       std::abs(sol.branches[im.fm_c].charge);
            r.vote = (a ? 1 : -1) + (b ? 1 : -1) + (cin ? 1 : -1);
            return r;
        }
    }
    throw LayoutError("unknown adder step");
}

PhaseResult AdderInstance::stage_carry(int a, int b, int cin) const {
    if (scheme_ != Scheme::Conventional)
        throw LayoutError("stage_carry() applies to the conventional adder");
    const Impl& im = *impl_;
    const double vdd = tech_.vdd;
    const Solution sol =
        im.run(false, drive_voltage(a, false, vdd), drive_voltage(b, false, vdd),
               drive_voltage(cin, false, vdd), 0.0);
    PhaseResult r;
    r.drive = -sol.branches[im.fm_carry].spin;
    r.charge = std::abs(sol.branches[im.fm_a].charge) +
               std::abs(sol.branches[im.fm_b].charge) +
               std::abs(sol.branches[im.fm_c].charge);
    r.vote = (a ? 1 : -1) + (b ? 1 : -1) + (cin ? 1 : -1);
    return r;
}

PhaseResult AdderInstance::stage_sum(int a, int b, int cin, int carry_state) const {
    if (scheme_ != Scheme::Conventional)
        throw LayoutError("stage_sum() applies to the conventional adder");
    const Impl& im = *impl_;
    const double vdd = tech_.vdd;
    const Solution sol = im.run(true, drive_voltage(a, false, vdd),
                                drive_voltage(b, false, vdd),
                                drive_voltage(cin, false, vdd),
                                drive_voltage(carry_state, true, vdd));
    PhaseResult r;
    r.drive = -sol.branches[im.fm_sum].spin;
    r.charge = std::abs(sol.branches[im.fm_a].charge) +
               std::abs(sol.branches[im.fm_b].charge) +
               std::abs(sol.branches[im.fm_c].charge) +
               std::abs(sol.branches[im.fm_carry].charge);
    // the carry contributes two units of the complement
    r.vote = (a ? 1 : -1) + (b ? 1 : -1) + (cin ? 1 : -1) + 2 * (carry_state ? -1 : 1);
    return r;
}

double AdderInstance::unit_input_to_sum() const {
    const Impl& im = *impl_;
    const Solution sol = im.run(true, drive_voltage(1, false, tech_.vdd), 0, 0, 0.0);
    return std::abs(sol.branches[im.fm_sum].spin);
}

double AdderInstance::unit_input_b_to_sum() const {
    const Impl& im = *impl_;
    const Solution sol = im.run(true, 0.0, drive_voltage(1, false, tech_.vdd), 0, 0.0);
    return std::abs(sol.branches[im.fm_sum].spin);
}

double AdderInstance::unit_a_to_carry() const {
    const Impl& im = *impl_;
    const Solution sol = im.run(false, drive_voltage(1, false, tech_.vdd), 0, 0, 0.0);
    return std::abs(sol.branches[im.fm_carry].spin);
}

double AdderInstance::unit_bc_to_carry() const {
    const Impl& im = *impl_;
    const Solution sol = im.run(false, 0.0, drive_voltage(1, false, tech_.vdd), 0, 0.0);
    return std::abs(sol.branches[im.fm_carry].spin);
}

double AdderInstance::unit_carry_to_sum() const {
    const Impl& im = *impl_;
    const Solution sol = im.run(true, 0.0, 0.0, 0.0, drive_voltage(1, false, tech_.vdd));
    return std::abs(sol.branches[im.fm_sum].spin);
}

double AdderInstance::footprint_area() const {
    const Geometry& m = tech_.magnet_plan;
    return 5.0 * m.footprint() + impl_->channel_sum * tech_.channel_width +
           impl_->strap_area;
}

}  // namespace aslsim
