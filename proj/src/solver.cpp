#include "aslsim/solver.hpp"

#include <cmath>
#include <set>

#include "aslsim/errors.hpp"

namespace aslsim {

namespace {
constexpr double kRcondFloor = 1e-14;
constexpr double kResidualLimit = 1e-9;
}  // namespace

std::vector<BranchCurrent> branch_currents(const SpinNetlist& netlist,
                                           const Eigen::VectorXd& potentials) {
    std::vector<BranchCurrent> out;
    out.reserve(netlist.elements.size());
    for (const auto& e : netlist.elements) {
        const TwoPortStamp s = e.stamp();
        const Eigen::Vector2d vp = potentials.segment<2>(2 * e.p);
        const Eigen::Vector2d vq = potentials.segment<2>(2 * e.q);
        Eigen::Vector2d shunt_leg(0.0, vp(1));
        const Eigen::Vector2d i = s.series * (vp - vq) + s.shunt * shunt_leg;
        out.push_back({i(0), i(1)});
    }
    return out;
}

Solution solve(const NodalSystem& system, const SpinNetlist& netlist) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.G);
    const double rcond = lu.rcond();
    if (!(rcond > kRcondFloor))
        throw SolverError("nodal matrix is ill-conditioned (rcond estimate " +
                              std::to_string(rcond) + ")",
                          rcond);

    Solution sol;
    sol.potentials = lu.solve(system.rhs);
    // two rounds of iterative refinement recover digits lost on long,
    // weakly-shunted spin chains
    for (int round = 0; round < 2; ++round) {
        const Eigen::VectorXd r = system.rhs - system.G * sol.potentials;
        sol.potentials += lu.solve(r);
    }

    const double scale = system.G.norm() * sol.potentials.norm() + system.rhs.norm();
    const double res = (system.G * sol.potentials - system.rhs).norm();
    sol.residual = scale > 0.0 ? res / scale : res;
    if (!(sol.residual <= kResidualLimit) || !sol.potentials.allFinite())
        throw SolverError("solve residual " + std::to_string(sol.residual) +
                              " exceeds limit",
                          rcond);

    sol.branches = branch_currents(netlist, sol.potentials);
    return sol;
}

Solution solve(const SpinNetlist& netlist) { return solve(assemble(netlist), netlist); }

double max_charge_defect(const SpinNetlist& netlist, const Solution& sol) {
    std::set<int> constrained(netlist.grounds.begin(), netlist.grounds.end());
    for (const auto& s : netlist.sources) constrained.insert(s.node);

    std::vector<double> kcl(netlist.node_count, 0.0);
    for (size_t i = 0; i < netlist.elements.size(); ++i) {
        const auto& e = netlist.elements[i];
        // current leaving p into the element is branches[i].charge;
        // the q-side leg uses the q-end shunt
        const TwoPortStamp s = e.stamp();
        const Eigen::Vector2d vp = sol.potentials.segment<2>(2 * e.p);
        const Eigen::Vector2d vq = sol.potentials.segment<2>(2 * e.q);
        const Eigen::Vector2d iq =
            s.series * (vq - vp) + s.shunt * Eigen::Vector2d(0.0, vq(1));
        kcl[e.p] += sol.branches[i].charge;
        kcl[e.q] += iq(0);
    }
    double worst = 0.0;
    for (int n = 0; n < netlist.node_count; ++n)
        if (!constrained.count(n)) worst = std::max(worst, std::abs(kcl[n]));
    return worst;
}

}  // namespace aslsim
