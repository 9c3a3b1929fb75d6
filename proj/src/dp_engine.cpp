#include "lgr/dp_engine.hpp"

#include <algorithm>
#include <cassert>

namespace lgr {

void LayerState::clear() {
    std::fill(valid.begin(), valid.end(), 0);
    std::fill(value.begin(), value.end(), 0);
    for (auto& c : count) c = 0;
}

namespace {

bool better(Sense sense, int candidate, int incumbent) {
    return sense == Sense::Maximize ? candidate > incumbent : candidate < incumbent;
}

}  // namespace

std::pair<int, Count> summarize(const LayerState& final, Sense sense,
                                const std::function<bool(std::uint32_t)>& accepting) {
    bool found = false;
    int opt = 0;
    for (std::uint32_t s = 0; s < final.valid.size(); ++s) {
        if (!final.valid[s] || (accepting && !accepting(s))) continue;
        if (!found || better(sense, final.value[s], opt)) {
            opt = final.value[s];
            found = true;
        }
    }
    assert(found);
    Count total = 0;
    for (std::uint32_t s = 0; s < final.valid.size(); ++s) {
        if (final.valid[s] && (!accepting || accepting(s)) && final.value[s] == opt) total += final.count[s];
    }
    return {opt, total};
}

Witness reconstruct_witness(const PredLinks& links, std::uint32_t final_state) {
    const std::uint32_t mask_bits = (1u << links.k) - 1u;
    const auto q = links.layers.size();
    Witness out(q);
    std::uint32_t state = final_state;
    for (auto i = q; i-- > 0;) {
        out[i] = Mask(state & mask_bits);
        if (i > 0) state = links.layers[i][state];
    }
    return out;
}

SolveOutcome run_layer_dp(const LayeredGraph& g, const ProblemSpec& spec, bool witness) {
    const int k = g.k();
    const int q = g.q();
    const std::uint32_t width = 1u << k;
    const std::size_t states = static_cast<std::size_t>(width) * static_cast<std::size_t>(spec.tags);
    auto ref = [&](std::uint32_t id) { return StateRef{Mask(id & (width - 1)), static_cast<int>(id >> k)}; };
    auto for_each_state = [&](int layer, auto&& f) {
        for (int tag = 0; tag < spec.tags; ++tag) {
            for_each_submask(g.layer(layer).present,
                             [&](Mask m) { f(static_cast<std::uint32_t>(tag) * width + m.bits); });
        }
    };

    PredLinks links{k, {}};
    if (witness) links.layers.resize(static_cast<std::size_t>(q));

    LayerState prev(states);
    LayerState cur(states);

    // Feasible, layer 1: every feasible selection is its own sub-solution.
    for_each_state(0, [&](std::uint32_t id) {
        if (!spec.feasible(0, ref(id))) return;
        prev.valid[id] = 1;
        prev.value[id] = ref(id).mask.size();
        prev.count[id] = 1;
    });

    std::vector<std::uint32_t> live;
    for (int i = 1; i < q; ++i) {
        live.clear();
        for (std::uint32_t s = 0; s < states; ++s) {
            if (prev.valid[s]) live.push_back(s);
        }
        cur.clear();
        std::vector<std::uint32_t>* pred = nullptr;
        if (witness) {
            links.layers[i].assign(states, kNoPred);
            pred = &links.layers[i];
        }

        // Extension: single pass keeping the running best and its count;
        // the first (lowest) predecessor attaining the best is the link.
        for_each_state(i, [&](std::uint32_t id) {
            const StateRef here = ref(id);
            if (!spec.feasible(i, here)) return;
            bool found = false;
            int best = 0;
            for (std::uint32_t l : live) {
                if (!spec.compatible(i, here, ref(l))) continue;
                const int v = prev.value[l];
                if (!found || better(spec.sense, v, best)) {
                    best = v;
                    cur.count[id] = prev.count[l];
                    if (pred) (*pred)[id] = l;
                    found = true;
                } else if (v == best) {
                    cur.count[id] += prev.count[l];
                }
            }
            if (found) {
                cur.valid[id] = 1;
                cur.value[id] = best + here.mask.size();
            }
        });
        std::swap(prev, cur);
    }

    // Summarize.
    std::function<bool(std::uint32_t)> accepting;
    if (spec.accepting) accepting = [&](std::uint32_t s) { return spec.accepting(ref(s)); };
    bool any = false;
    for (std::uint32_t s = 0; s < states && !any; ++s) {
        any = prev.valid[s] && (!accepting || accepting(s));
    }
    if (!any) return SolveOutcome::infeasible();

    auto [value, count] = summarize(prev, spec.sense, accepting);
    Optimum opt{value, std::move(count), std::nullopt};
    if (witness) {
        for (std::uint32_t s = 0; s < states; ++s) {
            if (prev.valid[s] && (!accepting || accepting(s)) && prev.value[s] == value) {
                opt.witness = reconstruct_witness(links, s);
                break;
            }
        }
    }
    return opt;
}

}  // namespace lgr
