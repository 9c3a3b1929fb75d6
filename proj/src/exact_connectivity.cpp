#include "lgr/exact_connectivity.hpp"

#include <array>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgr/error.hpp"
#include "lgr/mask_kernel.hpp"

namespace lgr {

std::uint64_t bell_number(int n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

namespace {

// NotStarted: nothing selected yet. Active: the current layer holds a
// nonempty selection. Closed: the selection was a single component that
// ended in an earlier layer; everything after must stay empty.
enum class Phase : std::uint8_t { NotStarted, Active, Closed };

struct Key {
    Mask mask;
    Mask undominated;
    std::uint64_t coloring = 0;  // 4-bit component id per selected label, low bits first
    Phase phase = Phase::NotStarted;

    friend auto operator<=>(const Key&, const Key&) = default;
};

struct Entry {
    int size = 0;
    Count count;
    std::size_t pred = 0;
};

using Components = std::array<std::uint8_t, kMaxLabels>;

int unpack(Mask m, std::uint64_t coloring, Components& comp) {
    int shift = 0;
    int count = 0;
    for_each_bit(m, [&](int x) {
        comp[x] = static_cast<std::uint8_t>((coloring >> shift) & 0xF);
        count = std::max(count, comp[x] + 1);
        shift += 4;
    });
    return count;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

struct Problem {
    const LayeredGraph& g;
    bool dominating;  // CDS when true, CVC otherwise
};

// Extends state `from` (in layer i-1, or nothing when i == 0) by mask j
// of layer i. Returns the resulting key or nullopt when the extension can
// never complete to a connected cover / dominating set.
std::optional<Key> extend(const Problem& p, int i, const Key* from, Mask j) {
    const Layer& layer = p.g.layer(i);
    const InterLayer* inter = (i > 0) ? &p.g.inter(i - 1) : nullptr;
    const Mask l = from ? from->mask : Mask();

    if (p.dominating) {
        if (from && !from->undominated.subset_of(inter->backward(j))) return std::nullopt;
    } else {
        if (!kernel::is_cover_in_layer(j, layer)) return std::nullopt;
        if (from && !kernel::compatible_vc(j, l, *inter)) return std::nullopt;
    }

    Key key;
    key.mask = j;
    if (p.dominating) {
        Mask dominated = j | layer.neighbors(j);
        if (inter) dominated |= inter->forward(l);
        key.undominated = layer.present - dominated;
    }

    const Phase before = from ? from->phase : Phase::NotStarted;
    Components prev_comp{};
    const int prev_count = from ? unpack(l, from->coloring, prev_comp) : 0;

    if (j.empty()) {
        if (before == Phase::Active) {
            if (prev_count != 1) return std::nullopt;
            key.phase = Phase::Closed;
        } else {
            key.phase = before;
        }
        return key;
    }
    if (before == Phase::Closed) return std::nullopt;

    // Nodes 0..prev_count-1 are the previous layer's components, node
    // prev_count + y is label y of this layer.
    UnionFind uf(prev_count + kMaxLabels);
    if (from) {
        for_each_bit(l, [&](int x) {
            for_each_bit(inter->fwd[x] & j, [&](int y) { uf.unite(prev_comp[x], prev_count + y); });
        });
    }
    for_each_bit(j, [&](int y) {
        for_each_bit(layer.adj[y] & j, [&](int z) { uf.unite(prev_count + y, prev_count + z); });
    });

    // A previous component that reaches nothing in j is cut off forever.
    std::array<bool, 2 * kMaxLabels> reaches_j{};
    for_each_bit(j, [&](int y) { reaches_j[static_cast<std::size_t>(uf.find(prev_count + y))] = true; });
    for (int c = 0; c < prev_count; ++c) {
        if (!reaches_j[static_cast<std::size_t>(uf.find(c))]) return std::nullopt;
    }

    std::array<int, 2 * kMaxLabels> id_of;
    id_of.fill(-1);
    int next_id = 0;
    int shift = 0;
    for_each_bit(j, [&](int y) {
        int& id = id_of[static_cast<std::size_t>(uf.find(prev_count + y))];
        if (id < 0) id = next_id++;
        key.coloring |= static_cast<std::uint64_t>(id) << shift;
        shift += 4;
    });
    key.phase = Phase::Active;
    return key;
}

bool accepting(const Problem& p, const Key& key) {
    if (p.dominating && !key.undominated.empty()) return false;
    if (key.phase != Phase::Active) return true;
    Components comp{};
    return unpack(key.mask, key.coloring, comp) == 1;
}

SolveOutcome run_exact(const LayeredGraph& g, bool dominating, bool witness, ExactStats* stats) {
    if (g.k() > kMaxExactLabels) {
        throw Error(ErrorCode::Unsupported,
                    "exact connectivity mode supports k <= " + std::to_string(kMaxExactLabels));
    }
    const Problem p{g, dominating};
    const std::uint64_t state_bound = (std::uint64_t{1} << g.k()) * bell_number(g.k()) + 2;

    using Table = std::vector<std::pair<Key, Entry>>;
    std::vector<Table> history;
    Table prev;
    ExactStats local;

    for (int i = 0; i < g.q(); ++i) {
        std::map<Key, Entry> next;
        auto offer = [&](const Key& key, int size, const Count& count, std::size_t pred) {
            auto [it, inserted] = next.try_emplace(key, Entry{size, count, pred});
            if (inserted) return;
            Entry& e = it->second;
            if (size < e.size) {
                e = Entry{size, count, pred};
            } else if (size == e.size) {
                e.count += count;
            }
        };

        for_each_submask(g.layer(i).present, [&](Mask j) {
            if (i == 0) {
                if (auto key = extend(p, 0, nullptr, j)) offer(*key, j.size(), Count(1), 0);
                return;
            }
            for (std::size_t s = 0; s < prev.size(); ++s) {
                const auto& [from, entry] = prev[s];
                if (auto key = extend(p, i, &from, j)) offer(*key, entry.size + j.size(), entry.count, s);
            }
        });

        if (!dominating && next.size() > state_bound) {
            throw std::logic_error("connectivity DP exceeded its state bound at layer " + std::to_string(i + 1));
        }
        local.max_states_per_layer = std::max(local.max_states_per_layer, next.size());

        if (witness && i > 0) history.push_back(std::move(prev));
        prev.assign(std::make_move_iterator(next.begin()), std::make_move_iterator(next.end()));
    }
    if (stats) *stats = local;

    bool found = false;
    int best = 0;
    Count total = 0;
    std::size_t best_state = 0;
    for (std::size_t s = 0; s < prev.size(); ++s) {
        const auto& [key, entry] = prev[s];
        if (!accepting(p, key)) continue;
        if (!found || entry.size < best) {
            found = true;
            best = entry.size;
            total = entry.count;
            best_state = s;
        } else if (entry.size == best) {
            total += entry.count;
        }
    }
    if (!found) return SolveOutcome::infeasible();

    Optimum opt{best, std::move(total), std::nullopt};
    if (witness) {
        history.push_back(std::move(prev));
        Witness w(static_cast<std::size_t>(g.q()));
        std::size_t s = best_state;
        for (int i = g.q() - 1; i >= 0; --i) {
            const auto& [key, entry] = history[static_cast<std::size_t>(i)][s];
            w[static_cast<std::size_t>(i)] = key.mask;
            s = entry.pred;
        }
        opt.witness = std::move(w);
    }
    return opt;
}

}  // namespace

SolveOutcome solve_cvc_exact(const LayeredGraph& g, bool witness, ExactStats* stats) {
    return run_exact(g, false, witness, stats);
}

SolveOutcome solve_cds_exact(const LayeredGraph& g, bool witness, ExactStats* stats) {
    if (!classify(g).is_clg) throw Error(ErrorCode::CdsOnDisconnected, "CDS needs a connected graph");
    return run_exact(g, true, witness, stats);
}

}  // namespace lgr
