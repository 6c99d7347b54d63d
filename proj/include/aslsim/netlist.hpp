#pragma once

#include <string>
#include <vector>

#include "aslsim/stamps.hpp"

namespace aslsim {

enum class ElementKind { FM, NM };

struct Element {
    ElementKind kind = ElementKind::NM;
    MaterialParams mat;
    Geometry geo;
    int p = -1;              // node indices, current oriented p -> q
    int q = -1;
    double msign = 1.0;      // FM magnetization sign (multiplies beta terms)
    std::string name;

    TwoPortStamp stamp() const;
};

/// Charge-voltage excitation: fixes V_c at a node; spin potential stays free.
struct Excitation {
    int node = -1;
    double voltage = 0.0;
};

/// Nodes are dense indices 0..k-1, each carrying (V_c, V_s) unknowns.
/// Grounds pin both potentials to zero.
struct SpinNetlist {
    int node_count = 0;
    std::vector<Element> elements;
    std::vector<Excitation> sources;
    std::vector<int> grounds;
    std::vector<std::string> node_names;  // optional, parallel to indices

    int add_node(const std::string& name = "");
    Element& add_element(ElementKind kind, const MaterialParams& mat,
                         const Geometry& geo, int p, int q,
                         const std::string& name = "", double msign = 1.0);
    void add_source(int node, double voltage);
    void set_source(int node, double voltage);  // update existing, else add
    void add_ground(int node);

    int element_index(const std::string& name) const;  // -1 if absent
    std::string describe_node(int node) const;

    /// Checks node references, ground reachability and source sanity.
    /// Throws AssemblyError naming the first disconnected node.
    void validate() const;
};

}  // namespace aslsim
