#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lgr/graph.hpp"

namespace lgr {

// LGR v1 text format, one directive per line, `#` starts a comment:
//
//   LGR v1
//   k <int>
//   q <int>
//   layer <i> present <labels...>     one line per layer
//   edge <i> <a> <b>                  intra edge of layer i
//   inter <i> <a> <b>                 label a of layer i, label b of layer i+1
//
// Indices and labels are 1-based.

/// Throws Error(Syntax) with a line number, or any validate() error.
LayeredGraph parse(std::string_view text);
RawLayeredGraph parse_raw(std::string_view text);

/// Canonical text: header, k, q, layers in order, then intra edges and
/// inter edges sorted by (layer, a, b).
std::string serialize(const LayeredGraph& g);

/// K_k^q: every layer a clique on all k labels, all inter pairs present.
LayeredGraph gen_full(int k, int q);

/// Path P_q as a one-label-per-layer graph.
LayeredGraph gen_path(int q);

/// All k labels present in every layer; each possible intra and inter
/// edge kept independently with the given probability.
LayeredGraph gen_random(int k, int q, double intra_density, double inter_density, std::uint64_t seed);

/// As gen_random, but inter edges only join equal labels.
LayeredGraph gen_llg(int k, int q, double intra_density, double inter_density, std::uint64_t seed);

}  // namespace lgr
