#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lgr/dp_engine.hpp"
#include "lgr/graph.hpp"
#include "lgr/outcome.hpp"

namespace lgr {

/// `Paper` runs the layer-local rules for every problem. `Exact` only
/// changes CVC and CDS, which then track connectivity across layers;
/// MIS, MVC and MDS are exact either way.
enum class Mode { Paper, Exact };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

ProblemSpec mis_spec(const LayeredGraph& g);
ProblemSpec mvc_spec(const LayeredGraph& g);

/// CVC with per-layer connected covers chained by cross edges. A layer
/// without intra edges may be left empty, but empty layers may only
/// precede or follow the block of nonempty layers (tags 0 = before,
/// 1 = inside, 2 = after), so every accepted selection is connected.
ProblemSpec cvc_paper_spec(const LayeredGraph& g);

/// (undominated mask, size, count) record of the domination DP.
struct DomTriple {
    Mask undominated;
    int size = 0;
    Count count;
};

struct DomStats {
    /// Largest number of triples held for one (layer, mask) pair.
    std::size_t max_triples_per_mask = 0;
    std::size_t total_triples = 0;
};

SolveOutcome solve_mis(const LayeredGraph& g, bool witness = false);
SolveOutcome solve_mvc(const LayeredGraph& g, bool witness = false);
SolveOutcome solve_cvc_paper(const LayeredGraph& g, bool witness = false);
SolveOutcome solve_mds(const LayeredGraph& g, bool witness = false, DomStats* stats = nullptr);

/// Domination DP restricted to connected per-layer masks chained by cross
/// edges, with the same before/inside/after rule for empty layers as CVC.
/// Throws Error(CdsOnDisconnected) unless g is connected.
SolveOutcome solve_cds_paper(const LayeredGraph& g, bool witness = false, DomStats* stats = nullptr);

SolveOutcome solve(const LayeredGraph& g, ProblemKind kind, Mode mode = Mode::Paper, bool witness = false);

}  // namespace lgr
