#pragma once

#include <random>
#include <vector>

#include "aslsim/layouts.hpp"
#include "aslsim/netlist.hpp"

namespace testutil {

inline aslsim::TechParams tech() { return aslsim::TechParams::table_defaults(); }

/// Random connected netlist: a spanning tree over k nodes plus extra chords,
/// with FM/NM elements, several sources and one ground. Deterministic per seed.
inline aslsim::SpinNetlist random_netlist(std::mt19937& rng, int max_nodes = 50) {
    using namespace aslsim;
    const TechParams t = tech();
    std::uniform_int_distribution<int> node_count(4, max_nodes);
    std::uniform_real_distribution<double> len(20.0, 400.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SpinNetlist net;
    const int k = node_count(rng);
    for (int i = 0; i < k; ++i) net.add_node();

    auto add_edge = [&](int p, int q, int idx) {
        if (unit(rng) < 0.3) {
            net.add_element(ElementKind::FM, t.fm, t.magnet_element(), p, q,
                            "e" + std::to_string(idx), unit(rng) < 0.5 ? 1.0 : -1.0);
        } else {
            net.add_element(ElementKind::NM, t.ch, t.channel_element(len(rng)), p, q,
                            "e" + std::to_string(idx));
        }
    };
    int idx = 0;
    for (int i = 1; i < k; ++i) {
        std::uniform_int_distribution<int> prev(0, i - 1);
        add_edge(prev(rng), i, idx++);
    }
    const int chords = std::uniform_int_distribution<int>(0, k / 2)(rng);
    for (int c = 0; c < chords; ++c) {
        std::uniform_int_distribution<int> any(0, k - 1);
        int p = any(rng), q = any(rng);
        if (p == q) continue;
        add_edge(p, q, idx++);
    }
    net.add_ground(0);
    const int sources = std::uniform_int_distribution<int>(1, 4)(rng);
    std::uniform_real_distribution<double> volt(-0.2, 0.2);
    for (int s = 0; s < sources; ++s) {
        std::uniform_int_distribution<int> any(1, k - 1);
        net.set_source(any(rng), volt(rng));
    }
    return net;
}

}  // namespace testutil
