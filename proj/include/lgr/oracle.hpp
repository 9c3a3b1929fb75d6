#pragma once

#include <span>

#include "lgr/graph.hpp"
#include "lgr/outcome.hpp"

namespace lgr {

inline constexpr int kDefaultOracleCap = 24;
inline constexpr int kHardOracleCap = 32;

/// Enumerates every vertex subset of flatten(g) and checks the problem's
/// defining predicate directly. Throws Error(InstanceTooLarge) when
/// n > max_vertices (itself capped at kHardOracleCap).
SolveOutcome oracle_solve(const LayeredGraph& g, ProblemKind kind, int max_vertices = kDefaultOracleCap);

/// True iff the union of the per-layer masks satisfies the definition of
/// `kind` on the flattened graph. Does not check optimality.
bool check_witness(const LayeredGraph& g, ProblemKind kind, std::span<const Mask> witness);

}  // namespace lgr
