#pragma once

#include <utility>

#include "lgr/graph.hpp"

// Bit-parallel predicates over one or two adjacent layers. Every check
// walks the set bits of a mask once, so it costs O(k) word operations.
//
// Convention for the two-layer predicates: l is the selection in layer
// i, j the selection in layer i+1, and `inter` holds E(i, i+1).

namespace lgr::kernel {

/// No intra edge joins two labels of j.
inline bool is_independent_in_layer(Mask j, const Layer& layer) {
    bool ok = true;
    for_each_bit(j, [&](int x) { ok = ok && !layer.adj[x].intersects(j); });
    return ok;
}

/// Every intra edge has an endpoint in j.
inline bool is_cover_in_layer(Mask j, const Layer& layer) {
    return is_independent_in_layer(layer.present - j, layer);
}

/// The subgraph induced by j is a single component. Empty and singleton
/// masks count as connected.
inline bool is_connected_in_layer(Mask j, const Layer& layer) {
    if (j.empty()) return true;
    Mask reached = Mask::bit(j.lowest());
    while (true) {
        Mask next = (reached | layer.neighbors(reached)) & j;
        if (next == reached) break;
        reached = next;
    }
    return reached == j;
}

/// No inter edge joins a label of l to a label of j.
inline bool compatible_is(Mask j, Mask l, const InterLayer& inter) {
    bool ok = true;
    for_each_bit(l, [&](int x) { ok = ok && !inter.fwd[x].intersects(j); });
    return ok;
}

/// Every inter edge (x, y) has x in l or y in j.
inline bool compatible_vc(Mask j, Mask l, const InterLayer& inter) {
    bool ok = true;
    for_each_bit(inter.tails - l, [&](int x) { ok = ok && inter.fwd[x].subset_of(j); });
    return ok;
}

/// Some inter edge joins a label of l to a label of j.
inline bool has_cross_edge(Mask j, Mask l, const InterLayer& inter) {
    return inter.forward(l).intersects(j);
}

struct Dominated {
    Mask prev;
    Mask cur;
};

/// Vertices of each layer dominated by the union of j_prev and j_cur,
/// counting only edges inside the two layers and between them.
inline Dominated dominated_set(Mask j_prev, Mask j_cur, const Layer& prev, const Layer& cur, const InterLayer& inter) {
    Dominated d;
    d.prev = (j_prev | prev.neighbors(j_prev) | inter.backward(j_cur)) & prev.present;
    d.cur = (j_cur | cur.neighbors(j_cur) | inter.forward(j_prev)) & cur.present;
    return d;
}

}  // namespace lgr::kernel
