// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lgr/error.hpp"
#include "lgr/exact_connectivity.hpp"
#include "lgr/graph_io.hpp"
#include "lgr/oracle.hpp"
#include "lgr/solvers.hpp"
#include "test_support.hpp"

namespace {

using namespace lgr;

// Tolerances and thresholds.
constexpr int kMinCorpusSize = 500;
constexpr int kExactOracleMaxN = 18;
constexpr double kMvcRatioLimit = 6.0;
constexpr double kMdsRatioLimit = 12.0;
constexpr double kMvcK10LimitSeconds = 60.0;
constexpr int kBenchQ = 32;
constexpr int kBenchMinK = 6;
constexpr int kBenchMaxK = 10;
constexpr int kBenchSeeds = 5;
constexpr double kBenchIntraDensity = 0.5;
constexpr double kBenchInterDensity = 0.5;

struct Criterion {
    int id;
    std::string name;
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    std::string summary;

    void check(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = describe();
    }
};

std::string instance_name(const testing::CorpusEntry& e) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "k=%d q=%d intra=%.1f inter=%.1f seed=%llu", e.k, e.q, e.intra, e.inter,
                  static_cast<unsigned long long>(e.seed));
    return buf;
}

std::string show(const SolveOutcome& o) {
    if (!o.feasible()) return "infeasible";
    return "(" + std::to_string(o.optimum().value) + ", " + o.optimum().count.str() + ")";
}

bool same(const SolveOutcome& a, const SolveOutcome& b) {
    if (a.feasible() != b.feasible()) return false;
    if (!a.feasible()) return true;
    return a.optimum().value == b.optimum().value && a.optimum().count == b.optimum().count;
}

int witness_size(const Witness& w) {
    int total = 0;
    for (Mask m : w) total += m.size();
    return total;
}

bool witness_ok(const LayeredGraph& g, ProblemKind kind, const SolveOutcome& o) {
    if (!o.feasible()) return true;
    if (!o.optimum().witness) return false;
    const Witness& w = *o.optimum().witness;
    return witness_size(w) == o.optimum().value && check_witness(g, kind, w);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <typename F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Count power(int base, int exp) {
    Count out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();

    Criterion c1{1, "oracle equivalence MIS/MVC/MDS (exact value and count)"};
    Criterion c2{2, "exact CVC/CDS equal oracle (n <= 18)"};
    Criterion c3{3, "paper-mode CVC/CDS never beat oracle, witnesses valid"};
    Criterion c4{4, "analytic families K_k^q and P_q"};
    Criterion c5{5, "duality MIS + MVC = n"};
    Criterion c6{6, "complexity envelope (q=32, k=6..10)"};
    Criterion c7{7, "witnesses: size = value and check_witness passes"};
    Criterion c8{8, "MDS/CDS hold <= 2^k triples per (layer, mask)"};

    const auto corpus = testing::corpus(4, 6, 2);
    c1.check(static_cast<int>(corpus.size()) >= kMinCorpusSize,
             [&] { return "corpus has only " + std::to_string(corpus.size()) + " instances"; });

    long cvc_compared = 0, cvc_gap = 0, cds_compared = 0, cds_gap = 0;
    for (const auto& entry : corpus) {
        const LayeredGraph& g = entry.g;
        const bool connected = classify(g).is_clg;
        auto where = [&](const std::string& what) { return instance_name(entry) + ": " + what; };

        std::map<ProblemKind, SolveOutcome> truth;
        for (ProblemKind kind : {ProblemKind::MIS, ProblemKind::MVC, ProblemKind::MDS, ProblemKind::CVC}) {
            truth[kind] = oracle_solve(g, kind);
        }
        if (connected) truth[ProblemKind::CDS] = oracle_solve(g, ProblemKind::CDS);

        // 1, 7, 8: exact problems.
        DomStats mds_stats;
        const SolveOutcome mis = solve_mis(g, true);
        const SolveOutcome mvc = solve_mvc(g, true);
        const SolveOutcome mds = solve_mds(g, true, &mds_stats);
        for (auto [kind, out] : {std::pair{ProblemKind::MIS, &mis}, std::pair{ProblemKind::MVC, &mvc},
                                 std::pair{ProblemKind::MDS, &mds}}) {
            c1.check(out->feasible() && same(*out, truth[kind]), [&] {
                return where(std::string(to_string(kind)) + " dp " + show(*out) + " oracle " + show(truth[kind]));
            });
            c7.check(witness_ok(g, kind, *out), [&] { return where(std::string(to_string(kind)) + " witness"); });
        }
        c8.check(mds_stats.max_triples_per_mask <= (std::size_t{1} << g.k()),
                 [&] { return where("MDS held " + std::to_string(mds_stats.max_triples_per_mask) + " triples"); });

        // 5.
        c5.check(mis.optimum().value + mvc.optimum().value == g.n(), [&] { return where("MIS + MVC != n"); });

        // 2, 3, 7: connectivity problems.
        const SolveOutcome cvc_exact = solve_cvc_exact(g, true);
        const SolveOutcome cvc_paper = solve_cvc_paper(g, true);
        if (g.n() <= kExactOracleMaxN) {
            c2.check(same(cvc_exact, truth[ProblemKind::CVC]), [&] {
                return where("CVC exact " + show(cvc_exact) + " oracle " + show(truth[ProblemKind::CVC]));
            });
        }
        c7.check(witness_ok(g, ProblemKind::CVC, cvc_exact), [&] { return where("CVC exact witness"); });
        c7.check(witness_ok(g, ProblemKind::CVC, cvc_paper), [&] { return where("CVC paper witness"); });
        {
            const SolveOutcome& t = truth[ProblemKind::CVC];
            const bool sound = !cvc_paper.feasible() || (t.feasible() && cvc_paper.optimum().value >= t.optimum().value);
            c3.check(sound && witness_ok(g, ProblemKind::CVC, cvc_paper), [&] {
                return where("CVC paper " + show(cvc_paper) + " oracle " + show(t));
            });
            if (t.feasible()) {
                ++cvc_compared;
                if (!cvc_paper.feasible() || cvc_paper.optimum().value > t.optimum().value) ++cvc_gap;
            }
        }

        if (connected) {
            DomStats cds_stats;
            const SolveOutcome cds_exact = solve_cds_exact(g, true);
            const SolveOutcome cds_paper = solve_cds_paper(g, true, &cds_stats);
            const SolveOutcome& t = truth[ProblemKind::CDS];
            if (g.n() <= kExactOracleMaxN) {
                c2.check(same(cds_exact, t),
                         [&] { return where("CDS exact " + show(cds_exact) + " oracle " + show(t)); });
            }
            c7.check(witness_ok(g, ProblemKind::CDS, cds_exact), [&] { return where("CDS exact witness"); });
            c7.check(witness_ok(g, ProblemKind::CDS, cds_paper), [&] { return where("CDS paper witness"); });
            const bool sound = !cds_paper.feasible() || (t.feasible() && cds_paper.optimum().value >= t.optimum().value);
            c3.check(sound && witness_ok(g, ProblemKind::CDS, cds_paper),
                     [&] { return where("CDS paper " + show(cds_paper) + " oracle " + show(t)); });
            c8.check(cds_stats.max_triples_per_mask <= (std::size_t{1} << g.k()),
                     [&] { return where("CDS held too many triples"); });
            if (t.feasible()) {
                ++cds_compared;
                if (!cds_paper.feasible() || cds_paper.optimum().value > t.optimum().value) ++cds_gap;
            }
        }
    }
    {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "paper mode suboptimal or infeasible: CVC %ld/%ld (%.1f%%), CDS %ld/%ld (%.1f%%)", cvc_gap,
                      cvc_compared, cvc_compared ? 100.0 * cvc_gap / cvc_compared : 0.0, cds_gap, cds_compared,
                      cds_compared ? 100.0 * cds_gap / cds_compared : 0.0);
        c3.summary = buf;
        c1.summary = std::to_string(corpus.size()) + " instances";
    }

    // 4. Analytic families, each first cross-checked against the oracle.
    for (int k = 1; k <= 4; ++k) {
        for (int q = 1; q <= 5; ++q) {
            const LayeredGraph g = gen_full(k, q);
            const int half_up = (q + 1) / 2;
            const SolveOutcome mis = solve_mis(g);
            const SolveOutcome mvc = solve_mvc(g);
            const std::string tag = "K_" + std::to_string(k) + "^" + std::to_string(q);
            c4.check(same(mis, oracle_solve(g, ProblemKind::MIS)) && same(mvc, oracle_solve(g, ProblemKind::MVC)),
                     [&] { return tag + " disagrees with oracle"; });
            c4.check(mis.optimum().value == half_up, [&] { return tag + " MIS " + show(mis); });
            c4.check(mvc.optimum().value == q * k - half_up, [&] { return tag + " MVC " + show(mvc); });
            if (q % 2 == 1) {
                c4.check(mis.optimum().count == power(k, half_up), [&] { return tag + " MIS count " + show(mis); });
                c4.check(mvc.optimum().count == power(k, half_up), [&] { return tag + " MVC count " + show(mvc); });
            }
        }
    }
    for (int q = 1; q <= 12; ++q) {
        const LayeredGraph p = gen_path(q);
        const std::string tag = "P_" + std::to_string(q);
        const SolveOutcome mis = solve_mis(p), mvc = solve_mvc(p), mds = solve_mds(p);
        c4.check(same(mis, oracle_solve(p, ProblemKind::MIS)) && same(mvc, oracle_solve(p, ProblemKind::MVC)) &&
                     same(mds, oracle_solve(p, ProblemKind::MDS)),
                 [&] { return tag + " disagrees with oracle"; });
        c4.check(mis.optimum().value == (q + 1) / 2, [&] { return tag + " MIS " + show(mis); });
        c4.check(mvc.optimum().value == q / 2, [&] { return tag + " MVC " + show(mvc); });
        c4.check(mds.optimum().value == (q + 2) / 3, [&] { return tag + " MDS " + show(mds); });
    }

    // 6. Complexity envelope: median solve time over seeds per k.
    {
        std::map<int, double> mvc_time, mds_time;
        for (int k = kBenchMinK; k <= kBenchMaxK; ++k) {
            std::vector<double> mvc_runs, mds_runs;
            for (int s = 0; s < kBenchSeeds; ++s) {
                const LayeredGraph g =
                    gen_random(k, kBenchQ, kBenchIntraDensity, kBenchInterDensity, 7919u * static_cast<unsigned>(k) + s);
                mvc_runs.push_back(seconds([&] { (void)solve_mvc(g); }));
                mds_runs.push_back(seconds([&] { (void)solve_mds(g); }));
            }
            mvc_time[k] = median(mvc_runs);
            mds_time[k] = median(mds_runs);
        }
        std::string detail;
        char buf[128];
        for (int k = kBenchMinK; k < kBenchMaxK; ++k) {
            const double r_mvc = mvc_time[k + 1] / mvc_time[k];
            const double r_mds = mds_time[k + 1] / mds_time[k];
            std::snprintf(buf, sizeof buf, " k%d->%d mvc x%.2f mds x%.2f;", k, k + 1, r_mvc, r_mds);
            detail += buf;
            c6.check(r_mvc <= kMvcRatioLimit, [&, k, r_mvc] { return "MVC ratio at k=" + std::to_string(k) + " is " + std::to_string(r_mvc); });
            c6.check(r_mds <= kMdsRatioLimit, [&, k, r_mds] { return "MDS ratio at k=" + std::to_string(k) + " is " + std::to_string(r_mds); });
        }
        c6.check(mvc_time[kBenchMaxK] < kMvcK10LimitSeconds,
                 [&] { return "MVC k=10 took " + std::to_string(mvc_time[kBenchMaxK]) + " s"; });
        std::snprintf(buf, sizeof buf, " t_mvc(10)=%.3fs t_mds(10)=%.3fs", mvc_time[kBenchMaxK], mds_time[kBenchMaxK]);
        c6.summary = detail + buf;
    }

    bool all_pass = true;
    for (const Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8}) {
        const bool pass = c->failures == 0 && c->checks > 0;
        all_pass = all_pass && pass;
        std::printf("[%s] %d. %s: %ld checks, %ld failures", pass ? "PASS" : "FAIL", c->id, c->name.c_str(), c->checks,
                    c->failures);
        if (!c->summary.empty()) std::printf(" | %s", c->summary.c_str());
        if (c->failures) std::printf(" | first: %s", c->first_failure.c_str());
        std::printf("\n");
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("acceptance suite finished in %.1f s: %s\n", total, all_pass ? "ALL PASS" : "FAILURES");
    return all_pass ? 0 : 1;
}
