#pragma once

#include <Eigen/Dense>

#include "aslsim/netlist.hpp"

namespace aslsim {

/// Assembled 2k x 2k nodal system. Row layout: node i owns rows/cols
/// (2i, 2i+1) = (charge, spin). Source rows replace the charge KCL row;
/// ground rows replace both rows.
struct NodalSystem {
    Eigen::MatrixXd G;
    Eigen::VectorXd rhs;
    int nodes = 0;
};

NodalSystem assemble(const SpinNetlist& netlist);

}  // namespace aslsim
