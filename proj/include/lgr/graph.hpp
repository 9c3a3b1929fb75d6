#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "lgr/mask.hpp"

namespace lgr {

/// One layer: the labels that exist plus the intra-layer adjacency,
/// stored as one neighbor mask per label.
struct Layer {
    Mask present;
    std::array<Mask, kMaxLabels> adj{};

    /// Union of the intra-layer neighborhoods of every label in j.
    Mask neighbors(Mask j) const {
        Mask out;
        for_each_bit(j, [&](int x) { out |= adj[x]; });
        return out;
    }
    bool has_edges() const;
    int edge_count() const;
};

/// Edges between layer i and layer i+1. fwd[x] holds the labels of
/// layer i+1 adjacent to label x of layer i; bwd is the transpose.
struct InterLayer {
    std::array<Mask, kMaxLabels> fwd{};
    std::array<Mask, kMaxLabels> bwd{};
    Mask tails;  // labels of layer i with at least one forward edge

    /// Labels of layer i+1 adjacent to some label of l (l in layer i).
    Mask forward(Mask l) const {
        Mask out;
        for_each_bit(l, [&](int x) { out |= fwd[x]; });
        return out;
    }
    /// Labels of layer i adjacent to some label of j (j in layer i+1).
    Mask backward(Mask j) const {
        Mask out;
        for_each_bit(j, [&](int y) { out |= bwd[y]; });
        return out;
    }
    int edge_count() const;
};

/// Untrusted description of a layered graph, 1-based throughout.
struct RawEdge {
    int layer = 0;
    int a = 0;
    int b = 0;
};

struct RawInterEdge {
    int from_layer = 0;
    int a = 0;
    int to_layer = 0;
    int b = 0;
};

struct RawLayeredGraph {
    int k = 0;
    std::vector<std::vector<int>> present;  // one label list per layer
    std::vector<RawEdge> edges;
    std::vector<RawInterEdge> inters;
};

class LayeredGraph;
LayeredGraph validate(const RawLayeredGraph& raw);

/// Validated, immutable k-restricted layered graph. Layers are indexed
/// from 0 here; inter(i) joins layer i and layer i+1.
class LayeredGraph {
public:
    int k() const { return k_; }
    int q() const { return static_cast<int>(layers_.size()); }
    int n() const { return n_; }

    const Layer& layer(int i) const { return layers_[static_cast<std::size_t>(i)]; }
    const InterLayer& inter(int i) const { return inters_[static_cast<std::size_t>(i)]; }
    std::span<const Layer> layers() const { return layers_; }
    std::span<const InterLayer> inters() const { return inters_; }

    int edge_count() const;

    friend bool operator==(const LayeredGraph& a, const LayeredGraph& b);

private:
    friend LayeredGraph validate(const RawLayeredGraph& raw);
    LayeredGraph() = default;

    int k_ = 0;
    int n_ = 0;
    std::vector<Layer> layers_;
    std::vector<InterLayer> inters_;
};

/// Canonical description (sorted labels and edges) of a valid graph.
RawLayeredGraph describe(const LayeredGraph& g);

struct Variant {
    bool is_llg = false;
    bool is_slg = false;
    bool is_clg = false;
    bool is_full = false;
};

Variant classify(const LayeredGraph& g);

/// Plain graph view over global vertex ids. Vertices are (layer, label)
/// pairs, 1-based, ordered by layer then label.
struct FlatGraph {
    std::vector<std::pair<int, int>> vertices;
    std::vector<std::pair<int, int>> edges;
};

FlatGraph flatten(const LayeredGraph& g);

}  // namespace lgr
