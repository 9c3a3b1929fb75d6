#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lgr/mask.hpp"

namespace lgr {

/// Solution counts grow like k^Θ(q) on dense instances, so they are
/// arbitrary precision.
using Count = boost::multiprecision::cpp_int;

/// One selected mask per layer.
using Witness = std::vector<Mask>;

enum class ProblemKind { MIS, MVC, CVC, MDS, CDS };

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_problem(std::string_view name);

struct Optimum {
    int value = 0;
    Count count;
    std::optional<Witness> witness;
};

/// Either an optimum (value, exact count, optional witness) or
/// infeasible.
class SolveOutcome {
public:
    SolveOutcome() = default;
    SolveOutcome(Optimum opt) : optimum_(std::move(opt)) {}  // NOLINT(google-explicit-constructor)

    static SolveOutcome infeasible() { return SolveOutcome(); }

    bool feasible() const { return optimum_.has_value(); }
    const Optimum& optimum() const { return optimum_.value(); }
    Optimum& optimum() { return optimum_.value(); }

private:
    std::optional<Optimum> optimum_;
};

}  // namespace lgr
