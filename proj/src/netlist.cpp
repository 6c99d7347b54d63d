#include "aslsim/netlist.hpp"

#include <queue>

#include "aslsim/errors.hpp"

namespace aslsim {

TwoPortStamp Element::stamp() const {
    return kind == ElementKind::FM ? fm_stamp(mat, geo, msign) : nm_stamp(mat, geo);
}

int SpinNetlist::add_node(const std::string& name) {
    node_names.push_back(name);
    return node_count++;
}

Element& SpinNetlist::add_element(ElementKind kind, const MaterialParams& mat,
                                  const Geometry& geo, int p, int q,
                                  const std::string& name, double msign) {
    Element e;
    e.kind = kind;
    e.mat = mat;
    e.geo = geo;
    e.p = p;
    e.q = q;
    e.msign = msign;
    e.name = name;
    elements.push_back(e);
    return elements.back();
}

void SpinNetlist::add_source(int node, double voltage) {
    sources.push_back({node, voltage});
}

void SpinNetlist::set_source(int node, double voltage) {
    for (auto& s : sources) {
        if (s.node == node) {
            s.voltage = voltage;
            return;
        }
    }
    add_source(node, voltage);
}

void SpinNetlist::add_ground(int node) { grounds.push_back(node); }

int SpinNetlist::element_index(const std::string& name) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].name == name) return static_cast<int>(i);
    return -1;
}

std::string SpinNetlist::describe_node(int node) const {
    if (node >= 0 && node < static_cast<int>(node_names.size()) &&
        !node_names[node].empty())
        return node_names[node] + " (#" + std::to_string(node) + ")";
    return "#" + std::to_string(node);
}

void SpinNetlist::validate() const {
    auto check_node = [&](int n, const std::string& what) {
        if (n < 0 || n >= node_count)
            throw AssemblyError(what + " references unknown node #" + std::to_string(n));
    };
    for (const auto& e : elements) {
        check_node(e.p, "element '" + e.name + "'");
        check_node(e.q, "element '" + e.name + "'");
        if (e.p == e.q)
            throw AssemblyError("element '" + e.name + "' connects a node to itself");
    }
    for (const auto& s : sources) check_node(s.node, "source");
    for (int g : grounds) check_node(g, "ground");
    if (grounds.empty()) throw AssemblyError("netlist has no ground node");

    // every node must reach a ground through elements, otherwise the
    // charge/spin subproblem at that node is singular
    std::vector<std::vector<int>> adj(node_count);
    for (const auto& e : elements) {
        adj[e.p].push_back(e.q);
        adj[e.q].push_back(e.p);
    }
    std::vector<char> seen(node_count, 0);
    std::queue<int> bfs;
    for (int g : grounds) {
        if (!seen[g]) {
            seen[g] = 1;
            bfs.push(g);
        }
    }
    while (!bfs.empty()) {
        int n = bfs.front();
        bfs.pop();
        for (int m : adj[n]) {
            if (!seen[m]) {
                seen[m] = 1;
                bfs.push(m);
            }
        }
    }
    for (int n = 0; n < node_count; ++n)
        if (!seen[n])
            throw AssemblyError("node " + describe_node(n) +
                                " is not connected to any ground (floating subgraph)");
}

}  // namespace aslsim
