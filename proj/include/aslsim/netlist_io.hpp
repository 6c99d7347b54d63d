#pragma once

#include <istream>
#include <map>
#include <string>

#include "aslsim/netlist.hpp"

namespace aslsim {

/// Parsed netlist plus the node-name table used by the file.
struct LoadedNetlist {
    SpinNetlist netlist;
    std::map<std::string, int> node_ids;
};

/// Text netlist format, one directive per line:
///   material <name> kind=fm|nm rho=<Ohm nm> lambda=<nm> [p=<..>] [beta=<..>]
///   elem <name> <nodeP> <nodeQ> mat=<material> L=<nm> w=<nm> t=<nm> [msign=+1|-1]
///   source <node> <volts>
///   ground <node>
/// '#' starts a comment. Nodes are created on first use.
/// Violated invariants raise ConfigError with file:line context.
LoadedNetlist load_netlist(std::istream& in, const std::string& origin = "<stream>");
LoadedNetlist load_netlist_file(const std::string& path);

}  // namespace aslsim
