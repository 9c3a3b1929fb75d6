#include "lgr/solvers.hpp"

#include "lgr/error.hpp"
#include "lgr/exact_connectivity.hpp"
#include "lgr/mask_kernel.hpp"

namespace lgr {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::MIS: return "mis";
        case ProblemKind::MVC: return "mvc";
        case ProblemKind::CVC: return "cvc";
        case ProblemKind::MDS: return "mds";
        case ProblemKind::CDS: return "cds";
    }
    return "?";
}

std::optional<ProblemKind> parse_problem(std::string_view name) {
    for (auto kind : {ProblemKind::MIS, ProblemKind::MVC, ProblemKind::CVC, ProblemKind::MDS, ProblemKind::CDS}) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(Mode mode) { return mode == Mode::Paper ? "paper" : "exact"; }

std::optional<Mode> parse_mode(std::string_view name) {
    if (name == "paper") return Mode::Paper;
    if (name == "exact") return Mode::Exact;
    return std::nullopt;
}

ProblemSpec mis_spec(const LayeredGraph& g) {
    ProblemSpec spec;
    spec.sense = Sense::Maximize;
    spec.feasible = [&g](int i, StateRef s) { return kernel::is_independent_in_layer(s.mask, g.layer(i)); };
    spec.compatible = [&g](int i, StateRef cur, StateRef prev) {
        return kernel::compatible_is(cur.mask, prev.mask, g.inter(i - 1));
    };
    return spec;
}

ProblemSpec mvc_spec(const LayeredGraph& g) {
    ProblemSpec spec;
    spec.sense = Sense::Minimize;
    spec.feasible = [&g](int i, StateRef s) { return kernel::is_cover_in_layer(s.mask, g.layer(i)); };
    spec.compatible = [&g](int i, StateRef cur, StateRef prev) {
        return kernel::compatible_vc(cur.mask, prev.mask, g.inter(i - 1));
    };
    return spec;
}

namespace {

enum CvcTag : int { kBefore = 0, kInside = 1, kAfter = 2 };

}  // namespace

ProblemSpec cvc_paper_spec(const LayeredGraph& g) {
    ProblemSpec spec;
    spec.sense = Sense::Minimize;
    spec.tags = 3;
    spec.feasible = [&g](int i, StateRef s) {
        const Layer& layer = g.layer(i);
        if (s.mask.empty()) return s.tag != kInside && !layer.has_edges() && !(i == 0 && s.tag == kAfter);
        return s.tag == kInside && kernel::is_cover_in_layer(s.mask, layer) &&
               kernel::is_connected_in_layer(s.mask, layer);
    };
    spec.compatible = [&g](int i, StateRef cur, StateRef prev) {
        const InterLayer& inter = g.inter(i - 1);
        if (!kernel::compatible_vc(cur.mask, prev.mask, inter)) return false;
        switch (cur.tag) {
            case kBefore: return prev.tag == kBefore;
            case kInside:
                return prev.tag == kBefore || (prev.tag == kInside && kernel::has_cross_edge(cur.mask, prev.mask, inter));
            default: return prev.tag == kInside || prev.tag == kAfter;
        }
    };
    return spec;
}

SolveOutcome solve_mis(const LayeredGraph& g, bool witness) { return run_layer_dp(g, mis_spec(g), witness); }

SolveOutcome solve_mvc(const LayeredGraph& g, bool witness) { return run_layer_dp(g, mvc_spec(g), witness); }

SolveOutcome solve_cvc_paper(const LayeredGraph& g, bool witness) {
    return run_layer_dp(g, cvc_paper_spec(g), witness);
}

SolveOutcome solve(const LayeredGraph& g, ProblemKind kind, Mode mode, bool witness) {
    switch (kind) {
        case ProblemKind::MIS: return solve_mis(g, witness);
        case ProblemKind::MVC: return solve_mvc(g, witness);
        case ProblemKind::MDS: return solve_mds(g, witness);
        case ProblemKind::CVC:
            return mode == Mode::Exact ? solve_cvc_exact(g, witness) : solve_cvc_paper(g, witness);
        case ProblemKind::CDS:
            return mode == Mode::Exact ? solve_cds_exact(g, witness) : solve_cds_paper(g, witness);
    }
    throw Error(ErrorCode::Unsupported, "unknown problem kind");
}

}  // namespace lgr
