#include "aslsim/nodal.hpp"

#include "aslsim/errors.hpp"

namespace aslsim {

NodalSystem assemble(const SpinNetlist& netlist) {
    netlist.validate();

    const int k = netlist.node_count;
    NodalSystem sys;
    sys.nodes = k;
    sys.G = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    sys.rhs = Eigen::VectorXd::Zero(2 * k);

    for (const auto& e : netlist.elements) {
        const TwoPortStamp s = e.stamp();
        const int P = 2 * e.p, Q = 2 * e.q;
        sys.G.block<2, 2>(P, P) += s.series + s.shunt;
        sys.G.block<2, 2>(Q, Q) += s.series + s.shunt;
        sys.G.block<2, 2>(P, Q) -= s.series;
        sys.G.block<2, 2>(Q, P) -= s.series;
    }

    for (const auto& s : netlist.sources) {
        const int r = 2 * s.node;  // charge row
        sys.G.row(r).setZero();
        sys.G(r, r) = 1.0;
        sys.rhs(r) = s.voltage;
    }
    for (int g : netlist.grounds) {
        for (int r : {2 * g, 2 * g + 1}) {
            sys.G.row(r).setZero();
            sys.G(r, r) = 1.0;
            sys.rhs(r) = 0.0;
        }
    }
    return sys;
}

}  // namespace aslsim
