// Triple-state DP for dominating sets. For every (layer i, mask j) we
// keep at most one triple per undominated mask of layer i: the minimum
// selection size reaching it and the number of selections of that size.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lgr/error.hpp"
#include "lgr/mask_kernel.hpp"
#include "lgr/solvers.hpp"

namespace lgr {

namespace {

struct TripleLink {
    std::uint32_t prev_state = 0;
    std::uint32_t prev_index = 0;
};

/// Triples of one layer, indexed by state id (tag * 2^k + mask).
struct DomTable {
    std::vector<std::vector<DomTriple>> triples;
    std::vector<std::vector<TripleLink>> links;  // witness mode only
};

bool triple_order(const DomTriple& a, const DomTriple& b) {
    return a.size != b.size ? a.size < b.size : a.undominated < b.undominated;
}

// Sorts the triples of one mask by (size, undominated), permuting links
// alongside.
void sort_triples(std::vector<DomTriple>& ts, std::vector<TripleLink>* links) {
    if (!links) {
        std::sort(ts.begin(), ts.end(), triple_order);
        return;
    }
    std::vector<std::size_t> order(ts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return triple_order(ts[a], ts[b]); });
    std::vector<DomTriple> sorted_ts;
    std::vector<TripleLink> sorted_links;
    sorted_ts.reserve(ts.size());
    sorted_links.reserve(ts.size());
    for (std::size_t i : order) {
        sorted_ts.push_back(std::move(ts[i]));
        sorted_links.push_back((*links)[i]);
    }
    ts = std::move(sorted_ts);
    *links = std::move(sorted_links);
}

// Connected mode: selections must occupy a contiguous block of layers,
// each block layer holding a connected mask with a cross edge to the
// next. Empty layers before and after the block carry tags 0 and 2.
enum BlockTag : std::uint32_t { kBefore = 0, kInside = 1, kAfter = 2 };

SolveOutcome run_domination(const LayeredGraph& g, bool connected, bool witness, DomStats* stats) {
    const int k = g.k();
    const int q = g.q();
    const std::uint32_t width = 1u << k;
    const std::uint32_t tags = connected ? 3 : 1;
    const std::uint32_t states = tags * width;
    const std::size_t bound = width;

    auto tag_of = [&](std::uint32_t id) { return id / width; };
    auto mask_of = [&](std::uint32_t id) { return Mask(id % width); };
    // Calls f(state id) for every feasible state of layer i.
    auto for_each_feasible = [&](int i, auto&& f) {
        const Layer& layer = g.layer(i);
        for_each_submask(layer.present, [&](Mask j) {
            if (!connected) {
                f(j.bits);
            } else if (j.empty()) {
                f(kBefore * width);
                if (i > 0) f(kAfter * width);
            } else if (kernel::is_connected_in_layer(j, layer)) {
                f(kInside * width + j.bits);
            }
        });
    };
    auto linkable = [&](std::uint32_t cur, std::uint32_t prev, const InterLayer& inter) {
        if (!connected) return true;
        switch (tag_of(cur)) {
            case kBefore: return tag_of(prev) == kBefore;
            case kInside:
                return tag_of(prev) == kBefore ||
                       (tag_of(prev) == kInside && kernel::has_cross_edge(mask_of(cur), mask_of(prev), inter));
            default: return tag_of(prev) != kBefore;
        }
    };

    DomStats local;
    auto record = [&](const std::vector<DomTriple>& ts) {
        if (ts.size() > bound) {
            throw std::logic_error("domination DP holds " + std::to_string(ts.size()) + " triples for one mask, bound " +
                                   std::to_string(bound));
        }
        local.max_triples_per_mask = std::max(local.max_triples_per_mask, ts.size());
        local.total_triples += ts.size();
    };

    std::vector<DomTable> history;  // every layer, witness mode only
    DomTable prev;
    prev.triples.resize(states);
    if (witness) prev.links.resize(states);

    {
        const Layer& first = g.layer(0);
        for_each_feasible(0, [&](std::uint32_t id) {
            const Mask j = mask_of(id);
            prev.triples[id].push_back({first.present - (j | first.neighbors(j)), j.size(), Count(1)});
            if (witness) prev.links[id].push_back({});
            record(prev.triples[id]);
        });
    }

    std::vector<std::int32_t> slot(width, -1);
    std::vector<std::uint32_t> live;
    for (int i = 1; i < q; ++i) {
        const Layer& layer = g.layer(i);
        const InterLayer& inter = g.inter(i - 1);

        live.clear();
        for (std::uint32_t l = 0; l < states; ++l) {
            if (!prev.triples[l].empty()) live.push_back(l);
        }

        DomTable cur;
        cur.triples.resize(states);
        if (witness) cur.links.resize(states);

        for_each_feasible(i, [&](std::uint32_t id) {
            const Mask j = mask_of(id);
            auto& out = cur.triples[id];
            std::vector<TripleLink>* out_links = witness ? &cur.links[id] : nullptr;

            const Mask closed = j | layer.neighbors(j);
            // Vertices of layer i-1 that j dominates across the inter edges;
            // the predecessor's undominated vertices must all be in here.
            const Mask rescued = inter.backward(j);

            for (std::uint32_t l_id : live) {
                if (!linkable(id, l_id, inter)) continue;
                const Mask l = mask_of(l_id);
                const auto& ts = prev.triples[l_id];

                // ts is sorted by size, so the first admissible triple is the
                // minimum; equal-size admissible ones follow it.
                std::size_t first = 0;
                while (first < ts.size() && !ts[first].undominated.subset_of(rescued)) ++first;
                if (first == ts.size()) continue;
                const int size = ts[first].size + j.size();
                Count total = ts[first].count;
                for (std::size_t t = first + 1; t < ts.size() && ts[t].size == ts[first].size; ++t) {
                    if (ts[t].undominated.subset_of(rescued)) total += ts[t].count;
                }

                const Mask undominated = layer.present - (closed | inter.forward(l));
                std::int32_t& at = slot[undominated.bits];
                if (at < 0) {
                    at = static_cast<std::int32_t>(out.size());
                    out.push_back({undominated, size, std::move(total)});
                    if (out_links) out_links->push_back({l_id, static_cast<std::uint32_t>(first)});
                } else if (size < out[at].size) {
                    out[at].size = size;
                    out[at].count = std::move(total);
                    if (out_links) (*out_links)[at] = {l_id, static_cast<std::uint32_t>(first)};
                } else if (size == out[at].size) {
                    out[at].count += total;
                }
            }
            for (const auto& t : out) slot[t.undominated.bits] = -1;
            sort_triples(out, out_links);
            record(out);
        });

        if (witness) history.push_back(std::move(prev));
        prev = std::move(cur);
    }

    if (stats) *stats = local;

    // Summarize: the last layer must be fully dominated.
    bool found = false;
    int best = 0;
    Count total = 0;
    std::uint32_t best_state = 0;
    std::uint32_t best_index = 0;
    for (std::uint32_t id = 0; id < states; ++id) {
        const auto& ts = prev.triples[id];
        for (std::uint32_t t = 0; t < ts.size(); ++t) {
            if (!ts[t].undominated.empty()) continue;
            if (!found || ts[t].size < best) {
                found = true;
                best = ts[t].size;
                total = ts[t].count;
                best_state = id;
                best_index = t;
            } else if (ts[t].size == best) {
                total += ts[t].count;
            }
        }
    }
    if (!found) return SolveOutcome::infeasible();

    Optimum opt{best, std::move(total), std::nullopt};
    if (witness) {
        history.push_back(std::move(prev));
        Witness w(static_cast<std::size_t>(q));
        std::uint32_t state = best_state;
        std::uint32_t index = best_index;
        for (int i = q - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = mask_of(state);
            const TripleLink link = history[static_cast<std::size_t>(i)].links[state][index];
            state = link.prev_state;
            index = link.prev_index;
        }
        opt.witness = std::move(w);
    }
    return opt;
}

}  // namespace

SolveOutcome solve_mds(const LayeredGraph& g, bool witness, DomStats* stats) {
    return run_domination(g, false, witness, stats);
}

SolveOutcome solve_cds_paper(const LayeredGraph& g, bool witness, DomStats* stats) {
    if (!classify(g).is_clg) throw Error(ErrorCode::CdsOnDisconnected, "CDS needs a connected graph");
    return run_domination(g, true, witness, stats);
}

}  // namespace lgr
