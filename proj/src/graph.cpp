#include "lgr/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lgr/error.hpp"

namespace lgr {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return "Syntax";
        case ErrorCode::InvalidDimensions: return "InvalidDimensions";
        case ErrorCode::EmptyLayer: return "EmptyLayer";
        case ErrorCode::LayerOutOfRange: return "LayerOutOfRange";
        case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::EdgeToAbsentVertex: return "EdgeToAbsentVertex";
        case ErrorCode::NonAdjacentInterEdge: return "NonAdjacentInterEdge";
        case ErrorCode::CdsOnDisconnected: return "CdsOnDisconnected";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

bool Layer::has_edges() const {
    return std::any_of(adj.begin(), adj.end(), [](Mask m) { return !m.empty(); });
}

int Layer::edge_count() const {
    int twice = 0;
    for (Mask m : adj) twice += m.size();
    return twice / 2;
}

int InterLayer::edge_count() const {
    int total = 0;
    for (Mask m : fwd) total += m.size();
    return total;
}

int LayeredGraph::edge_count() const {
    int total = 0;
    for (const auto& l : layers_) total += l.edge_count();
    for (const auto& e : inters_) total += e.edge_count();
    return total;
}

bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
    if (a.k_ != b.k_ || a.q() != b.q()) return false;
    for (int i = 0; i < a.q(); ++i) {
        if (a.layers_[i].present != b.layers_[i].present || a.layers_[i].adj != b.layers_[i].adj) return false;
    }
    for (int i = 0; i + 1 < a.q(); ++i) {
        if (a.inters_[i].fwd != b.inters_[i].fwd) return false;
    }
    return true;
}

namespace {

std::string edge_name(int layer, int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ") in layer " + std::to_string(layer);
}

std::string inter_name(const RawInterEdge& e) {
    return "inter edge " + std::to_string(e.from_layer) + ":" + std::to_string(e.a) + " - " +
           std::to_string(e.to_layer) + ":" + std::to_string(e.b);
}

}  // namespace

LayeredGraph validate(const RawLayeredGraph& raw) {
    if (raw.k < 1 || raw.k > kMaxLabels) {
        throw Error(ErrorCode::InvalidDimensions,
                    "k must lie in [1," + std::to_string(kMaxLabels) + "], got " + std::to_string(raw.k));
    }
    if (raw.present.empty()) {
        throw Error(ErrorCode::InvalidDimensions, "graph needs at least one layer");
    }
    const int k = raw.k;
    const int q = static_cast<int>(raw.present.size());
    auto label_ok = [k](int x) { return x >= 1 && x <= k; };
    auto layer_ok = [q](int i) { return i >= 1 && i <= q; };

    LayeredGraph g;
    g.k_ = k;
    g.layers_.resize(static_cast<std::size_t>(q));
    g.inters_.resize(static_cast<std::size_t>(q - 1));

    for (int i = 0; i < q; ++i) {
        const auto& labels = raw.present[static_cast<std::size_t>(i)];
        if (labels.empty()) throw Error(ErrorCode::EmptyLayer, "layer " + std::to_string(i + 1) + " has no vertices");
        Mask& present = g.layers_[i].present;
        for (int x : labels) {
            if (!label_ok(x)) {
                throw Error(ErrorCode::LabelOutOfRange,
                            "label " + std::to_string(x) + " in layer " + std::to_string(i + 1));
            }
            if (present.has_label(x)) {
                throw Error(ErrorCode::DuplicateLabel,
                            "label " + std::to_string(x) + " listed twice in layer " + std::to_string(i + 1));
            }
            present |= Mask::label(x);
        }
        g.n_ += present.size();
    }

    for (const auto& e : raw.edges) {
        if (!layer_ok(e.layer)) throw Error(ErrorCode::LayerOutOfRange, "edge " + edge_name(e.layer, e.a, e.b));
        if (!label_ok(e.a) || !label_ok(e.b)) {
            throw Error(ErrorCode::LabelOutOfRange, "edge " + edge_name(e.layer, e.a, e.b));
        }
        if (e.a == e.b) throw Error(ErrorCode::SelfLoop, "edge " + edge_name(e.layer, e.a, e.b));
        Layer& layer = g.layers_[e.layer - 1];
        if (!layer.present.has_label(e.a) || !layer.present.has_label(e.b)) {
            throw Error(ErrorCode::EdgeToAbsentVertex, "edge " + edge_name(e.layer, e.a, e.b));
        }
        if (layer.adj[e.a - 1].has_label(e.b)) {
            throw Error(ErrorCode::DuplicateEdge, "edge " + edge_name(e.layer, e.a, e.b));
        }
        layer.adj[e.a - 1] |= Mask::label(e.b);
        layer.adj[e.b - 1] |= Mask::label(e.a);
    }

    for (const auto& raw_edge : raw.inters) {
        if (!layer_ok(raw_edge.from_layer) || !layer_ok(raw_edge.to_layer)) {
            throw Error(ErrorCode::LayerOutOfRange, inter_name(raw_edge));
        }
        RawInterEdge e = raw_edge;
        if (e.from_layer > e.to_layer) {
            std::swap(e.from_layer, e.to_layer);
            std::swap(e.a, e.b);
        }
        if (e.to_layer != e.from_layer + 1) throw Error(ErrorCode::NonAdjacentInterEdge, inter_name(raw_edge));
        if (!label_ok(e.a) || !label_ok(e.b)) throw Error(ErrorCode::LabelOutOfRange, inter_name(raw_edge));
        if (!g.layers_[e.from_layer - 1].present.has_label(e.a) || !g.layers_[e.to_layer - 1].present.has_label(e.b)) {
            throw Error(ErrorCode::EdgeToAbsentVertex, inter_name(raw_edge));
        }
        InterLayer& inter = g.inters_[e.from_layer - 1];
        if (inter.fwd[e.a - 1].has_label(e.b)) throw Error(ErrorCode::DuplicateEdge, inter_name(raw_edge));
        inter.fwd[e.a - 1] |= Mask::label(e.b);
        inter.bwd[e.b - 1] |= Mask::label(e.a);
        inter.tails |= Mask::label(e.a);
    }
    return g;
}

RawLayeredGraph describe(const LayeredGraph& g) {
    RawLayeredGraph raw;
    raw.k = g.k();
    for (int i = 0; i < g.q(); ++i) {
        auto& labels = raw.present.emplace_back();
        for_each_bit(g.layer(i).present, [&](int x) { labels.push_back(x + 1); });
    }
    for (int i = 0; i < g.q(); ++i) {
        const Layer& layer = g.layer(i);
        for (int a = 0; a < g.k(); ++a) {
            for_each_bit(layer.adj[a], [&](int b) {
                if (a < b) raw.edges.push_back({i + 1, a + 1, b + 1});
            });
        }
    }
    for (int i = 0; i + 1 < g.q(); ++i) {
        for (int a = 0; a < g.k(); ++a) {
            for_each_bit(g.inter(i).fwd[a], [&](int b) { raw.inters.push_back({i + 1, a + 1, i + 2, b + 1}); });
        }
    }
    return raw;
}

namespace {

// Connected components of the subgraph of `layer` induced by `within`
// reachable from `seed` (seed must be a subset of within).
Mask expand_in_layer(const Layer& layer, Mask seed, Mask within) {
    Mask reached = seed;
    while (true) {
        Mask next = (reached | layer.neighbors(reached)) & within;
        if (next == reached) return reached;
        reached = next;
    }
}

bool whole_graph_connected(const LayeredGraph& g) {
    const FlatGraph flat = flatten(g);
    const int n = static_cast<int>(flat.vertices.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = n;
    for (auto [u, v] : flat.edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components == 1;
}

}  // namespace

Variant classify(const LayeredGraph& g) {
    Variant v;
    const int k = g.k();

    v.is_llg = true;
    for (const auto& inter : g.inters()) {
        for (int a = 0; a < k; ++a) {
            if (!inter.fwd[a].subset_of(Mask::bit(a))) v.is_llg = false;
        }
    }

    v.is_slg = std::all_of(g.layers().begin(), g.layers().end(), [](const Layer& layer) {
        return expand_in_layer(layer, Mask::bit(layer.present.lowest()), layer.present) == layer.present;
    });

    v.is_clg = whole_graph_connected(g);

    const Mask all = Mask::all(k);
    v.is_full = true;
    for (const auto& layer : g.layers()) {
        if (layer.present != all) v.is_full = false;
        for (int a = 0; a < k && v.is_full; ++a) {
            if (layer.adj[a] != all - Mask::bit(a)) v.is_full = false;
        }
    }
    for (const auto& inter : g.inters()) {
        for (int a = 0; a < k && v.is_full; ++a) {
            if (inter.fwd[a] != all) v.is_full = false;
        }
    }
    return v;
}

FlatGraph flatten(const LayeredGraph& g) {
    FlatGraph flat;
    std::vector<std::array<int, kMaxLabels>> id(static_cast<std::size_t>(g.q()));
    for (int i = 0; i < g.q(); ++i) {
        for_each_bit(g.layer(i).present, [&](int x) {
            id[i][x] = static_cast<int>(flat.vertices.size());
            flat.vertices.emplace_back(i + 1, x + 1);
        });
    }
    for (int i = 0; i < g.q(); ++i) {
        const Layer& layer = g.layer(i);
        for (int a = 0; a < g.k(); ++a) {
            for_each_bit(layer.adj[a], [&](int b) {
                if (a < b) flat.edges.emplace_back(id[i][a], id[i][b]);
            });
        }
        if (i + 1 < g.q()) {
            for (int a = 0; a < g.k(); ++a) {
                for_each_bit(g.inter(i).fwd[a], [&](int b) { flat.edges.emplace_back(id[i][a], id[i + 1][b]); });
            }
        }
    }
    return flat;
}

}  // namespace lgr
