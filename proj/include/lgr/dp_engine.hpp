#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lgr/graph.hpp"
#include "lgr/outcome.hpp"

namespace lgr {

enum class Sense { Maximize, Minimize };

/// A DP state of one layer: the selected mask plus a small tag that a
/// problem may use to carry extra finite information (phase of a
/// contiguous selection, for instance). Most problems use tag 0 only.
struct StateRef {
    Mask mask;
    int tag = 0;
};

/// Per-problem rules plugged into the layer DP. Layer indices are
/// 0-based; compatible(i, cur, prev) relates a state of layer i to a
/// state of layer i-1 across inter(i-1). The cost of a state is the
/// popcount of its mask.
struct ProblemSpec {
    Sense sense = Sense::Maximize;
    int tags = 1;
    std::function<bool(int layer, StateRef state)> feasible;
    std::function<bool(int layer, StateRef cur, StateRef prev)> compatible;
    /// Optional filter on last-layer states; all valid states qualify
    /// when unset.
    std::function<bool(StateRef state)> accepting;
};

/// Per-state optimum value, validity and exact count for one layer.
/// State ids are tag * 2^k + mask.
struct LayerState {
    explicit LayerState(std::size_t states) : valid(states, 0), value(states, 0), count(states) {}

    void clear();

    std::vector<char> valid;
    std::vector<int> value;
    std::vector<Count> count;
};

inline constexpr std::uint32_t kNoPred = ~0u;

/// Best-predecessor links, one vector of state ids per layer (layer 0's
/// entries are unused).
struct PredLinks {
    int k = 0;
    std::vector<std::vector<std::uint32_t>> layers;
};

/// Extremum over valid (and accepting) states with the summed count of
/// every state attaining it. Precondition: at least one such state.
std::pair<int, Count> summarize(const LayerState& final, Sense sense,
                                const std::function<bool(std::uint32_t state)>& accepting = {});

/// Walks pred links back from `final_state` in the last layer.
Witness reconstruct_witness(const PredLinks& links, std::uint32_t final_state);

/// Feasible -> Extension -> Summarize over all layers, keeping only the
/// previous and current LayerState alive.
SolveOutcome run_layer_dp(const LayeredGraph& g, const ProblemSpec& spec, bool witness);

}  // namespace lgr
