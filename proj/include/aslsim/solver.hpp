#pragma once

#include <vector>

#include "aslsim/nodal.hpp"

namespace aslsim {

/// Per-element currents oriented p -> q, evaluated at the p side:
/// I = G_se (V_p - V_q) + G_sh [0; V_s,p]
struct BranchCurrent {
    double charge = 0.0;  // A
    double spin = 0.0;    // A
};

struct Solution {
    Eigen::VectorXd potentials;          // 2k, (V_c, V_s) per node
    std::vector<BranchCurrent> branches; // parallel to netlist.elements
    double residual = 0.0;               // relative solve residual

    double charge_at(int node) const { return potentials(2 * node); }
    double spin_at(int node) const { return potentials(2 * node + 1); }
};

/// Direct dense solve with partial pivoting. Throws SolverError when the
/// condition estimate or residual indicates an untrustworthy solution.
Solution solve(const NodalSystem& system, const SpinNetlist& netlist);

/// Convenience: assemble + solve.
Solution solve(const SpinNetlist& netlist);

/// Branch currents back-substituted from already-solved potentials.
std::vector<BranchCurrent> branch_currents(const SpinNetlist& netlist,
                                           const Eigen::VectorXd& potentials);

/// Largest absolute charge-KCL defect over internal (non-source, non-ground)
/// nodes; spin is intentionally not conserved (shunt legs model relaxation).
double max_charge_defect(const SpinNetlist& netlist, const Solution& sol);

}  // namespace aslsim
