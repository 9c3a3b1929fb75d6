#pragma once

#include <cstddef>
#include <cstdint>

#include "lgr/graph.hpp"
#include "lgr/outcome.hpp"

namespace lgr {

/// Widest layer the partition DP accepts (colorings pack 4 bits per
/// selected label into one 64-bit word).
inline constexpr int kMaxExactLabels = 16;

struct ExactStats {
    std::size_t max_states_per_layer = 0;
};

/// Bell number B(n), the number of set partitions of n elements.
std::uint64_t bell_number(int n);

/// Minimum connected vertex cover with exact count. Tracks, for the
/// selection in the current layer, which of its vertices are already
/// connected through earlier layers.
SolveOutcome solve_cvc_exact(const LayeredGraph& g, bool witness = false, ExactStats* stats = nullptr);

/// Minimum connected dominating set with exact count. Throws
/// Error(CdsOnDisconnected) unless g is connected.
SolveOutcome solve_cds_exact(const LayeredGraph& g, bool witness = false, ExactStats* stats = nullptr);

}  // namespace lgr
