#include "lgr/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lgr/error.hpp"

namespace lgr {

namespace {

using Subset = std::uint64_t;

struct Plain {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Subset> nbr;  // open neighborhoods
};

Plain plain_of(const LayeredGraph& g) {
    FlatGraph flat = flatten(g);
    Plain p;
    p.n = static_cast<int>(flat.vertices.size());
    p.edges = std::move(flat.edges);
    p.nbr.assign(static_cast<std::size_t>(p.n), 0);
    for (auto [u, v] : p.edges) {
        p.nbr[u] |= Subset{1} << v;
        p.nbr[v] |= Subset{1} << u;
    }
    return p;
}

bool independent(const Plain& p, Subset s) {
    for (auto [u, v] : p.edges) {
        if ((s >> u & 1) && (s >> v & 1)) return false;
    }
    return true;
}

bool covers(const Plain& p, Subset s) {
    for (auto [u, v] : p.edges) {
        if (!(s >> u & 1) && !(s >> v & 1)) return false;
    }
    return true;
}

bool dominates(const Plain& p, Subset s) {
    Subset seen = s;
    for (int v = 0; v < p.n; ++v) {
        if (s >> v & 1) seen |= p.nbr[v];
    }
    const Subset all = p.n == 64 ? ~Subset{0} : (Subset{1} << p.n) - 1;
    return seen == all;
}

// The empty set counts as connected.
bool connected(const Plain& p, Subset s) {
    if (s == 0) return true;
    Subset reached = s & (~s + 1);
    Subset frontier = reached;
    while (frontier != 0) {
        Subset next = 0;
        for (Subset f = frontier; f != 0; f &= f - 1) next |= p.nbr[std::countr_zero(f)];
        next &= s & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == s;
}

bool satisfies(const Plain& p, ProblemKind kind, Subset s) {
    switch (kind) {
        case ProblemKind::MIS: return independent(p, s);
        case ProblemKind::MVC: return covers(p, s);
        case ProblemKind::CVC: return covers(p, s) && connected(p, s);
        case ProblemKind::MDS: return dominates(p, s);
        case ProblemKind::CDS: return dominates(p, s) && connected(p, s);
    }
    return false;
}

}  // namespace

SolveOutcome oracle_solve(const LayeredGraph& g, ProblemKind kind, int max_vertices) {
    const int cap = std::min(max_vertices, kHardOracleCap);
    if (g.n() > cap) {
        throw Error(ErrorCode::InstanceTooLarge,
                    "oracle enumerates at most " + std::to_string(cap) + " vertices, graph has " + std::to_string(g.n()));
    }
    const Plain p = plain_of(g);
    const bool maximize = kind == ProblemKind::MIS;

    bool found = false;
    int best = 0;
    std::uint64_t count = 0;
    const Subset end = Subset{1} << p.n;
    for (Subset s = 0; s < end; ++s) {
        const int size = std::popcount(s);
        // Subsets that cannot tie or beat the incumbent are skipped before
        // the predicate runs.
        if (found && (maximize ? size < best : size > best)) continue;
        if (!satisfies(p, kind, s)) continue;
        if (!found || size != best) {
            found = true;
            best = size;
            count = 1;
        } else {
            ++count;
        }
    }
    if (!found) return SolveOutcome::infeasible();
    return Optimum{best, Count(count), std::nullopt};
}

bool check_witness(const LayeredGraph& g, ProblemKind kind, std::span<const Mask> witness) {
    if (static_cast<int>(witness.size()) != g.q()) return false;
    for (int i = 0; i < g.q(); ++i) {
        if (!witness[static_cast<std::size_t>(i)].subset_of(g.layer(i).present)) return false;
    }
    const FlatGraph flat = flatten(g);
    const std::size_t n = flat.vertices.size();
    std::vector<char> in(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto [layer, label] = flat.vertices[v];
        in[v] = witness[static_cast<std::size_t>(layer - 1)].has_label(label);
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : flat.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    auto all_edges = [&](auto pred) {
        for (auto [u, v] : flat.edges) {
            if (!pred(in[u], in[v])) return false;
        }
        return true;
    };
    auto dominating = [&] {
        for (std::size_t v = 0; v < n; ++v) {
            if (in[v]) continue;
            bool hit = false;
            for (int w : adj[v]) hit = hit || in[w];
            if (!hit) return false;
        }
        return true;
    };
    auto induced_connected = [&] {
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        std::size_t selected = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in[v]) continue;
            ++selected;
            if (stack.empty() && !seen[v] && selected == 1) {
                seen[v] = 1;
                stack.push_back(static_cast<int>(v));
            }
        }
        std::size_t reached = stack.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == selected;
    };

    switch (kind) {
        case ProblemKind::MIS: return all_edges([](bool a, bool b) { return !(a && b); });
        case ProblemKind::MVC: return all_edges([](bool a, bool b) { return a || b; });
        case ProblemKind::CVC: return all_edges([](bool a, bool b) { return a || b; }) && induced_connected();
        case ProblemKind::MDS: return dominating();
        case ProblemKind::CDS: return dominating() && induced_connected();
    }
    return false;
}

}  // namespace lgr
