// Reproduction harness: recomputes every family claim exactly and reports
// confirmed / discrepancy / multiset-confirmed per claim.
//
// Discrepancies that have been cross-verified (exhaustive oracle, the
// branch-and-bound solver with pruning on and off, and an independent
// reimplementation during development) are allowlisted as known, so a
// nonzero exit from the harness always means a regression rather than a
// documented gap in the stated formulas.
#pragma once

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "faircoal/catalog.hpp"
#include "faircoal/closed_forms.hpp"
#include "faircoal/coalition.hpp"
#include "faircoal/enumerate.hpp"
#include "faircoal/fair_domination.hpp"
#include "faircoal/graph.hpp"

namespace faircoal {

enum class ClaimStatus { confirmed, discrepancy, multiset_confirmed, skipped };

struct ClaimResult {
    std::string id;
    std::string statement;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::skipped;
    bool known_discrepancy = false;
    double elapsed_ms = 0.0;
};

enum class Scope { all, paths, cycles, coronas, cubic6, cubic8, cubic10, bounds };

struct ReproductionReport {
    Scope scope;
    std::vector<ClaimResult> claims;

    int count(ClaimStatus s) const {
        int c = 0;
        for (const ClaimResult& r : claims)
            if (r.status == s) ++c;
        return c;
    }
    int unexpected_discrepancies() const {
        int c = 0;
        for (const ClaimResult& r : claims)
            if (r.status == ClaimStatus::discrepancy && !r.known_discrepancy) ++c;
        return c;
    }
    bool ok() const { return unexpected_discrepancies() == 0; }
};

namespace detail {

// Claim ids whose stated value is contradicted by exact computation; each was
// confirmed by at least two independent computation routes.
inline const std::set<std::string>& known_discrepancies() {
    static const std::set<std::string> ids = {
        "path.cf.P2",   "path.cf.P3",   // below the construction's reach
        "path.cf.P7",   "path.cf.P9",   "path.cf.P10", "path.cf.P11",
        "path.cf.P12",  "path.cf.P13",  "path.cf.P14", "path.cf.P15",
        "cycle.cf.C4",  "cycle.cf.C10", "cycle.cf.C11",
        "cycle.cf.C13", "cycle.cf.C14",
        "cubic8.cf.multiset",
        "cubic10.cf.multiset",
        "bound.cf_le_n_minus_gamma_f.connected",
    };
    return ids;
}

inline std::string multiset_string(const std::vector<int>& sorted_values) {
    std::string s = "{";
    for (std::size_t i = 0; i < sorted_values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sorted_values[static_cast<std::size_t>(i)]);
    }
    return s + "}";
}

class ClaimRunner {
public:
    explicit ClaimRunner(const SolveOptions& opts) : opts_(opts) {}

    std::vector<ClaimResult> results;

    template <typename F>
    void claim(const std::string& id, const std::string& statement, F&& run) {
        ClaimResult r;
        r.id = id;
        r.statement = statement;
        auto t0 = std::chrono::steady_clock::now();
        run(r);
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (r.status == ClaimStatus::discrepancy)
            r.known_discrepancy = known_discrepancies().count(r.id) > 0;
        results.push_back(std::move(r));
    }

    void value_claim(const std::string& id, const std::string& statement, int claimed,
                     int computed) {
        claim(id, statement, [&](ClaimResult& r) {
            r.expected = std::to_string(claimed);
            r.computed = std::to_string(computed);
            r.status = claimed == computed ? ClaimStatus::confirmed : ClaimStatus::discrepancy;
        });
    }

    void run_paths() {
        for (int n = 2; n <= detail::kPathMax; ++n) {
            Expectation e = expected_cf(Family::path, n);
            claim("path.cf.P" + std::to_string(n), e.statement, [&](ClaimResult& r) {
                Graph g = gen_path(n);
                int solved = cf_solve(g, opts_).value;
                if (n <= kBruteforceMaxOrder && solved != cf_bruteforce(g).value)
                    throw std::logic_error("solver disagrees with the oracle on P_" +
                                           std::to_string(n));
                r.expected = std::to_string(*e.claimed_cf);
                r.computed = std::to_string(solved);
                r.status = solved == *e.claimed_cf ? ClaimStatus::confirmed
                                                   : ClaimStatus::discrepancy;
            });
        }
    }

    void run_cycles() {
        for (int n = 4; n <= detail::kCycleMax; ++n) {
            if (!detail::cycle_has_claim(n)) {
                // C_5's confirmation doubles as the record that C_4, C_5 were
                // computed; n = 3k below k = 2 carries no stated value
                continue;
            }
            Expectation e = expected_cf(Family::cycle, n);
            claim("cycle.cf.C" + std::to_string(n), e.statement, [&](ClaimResult& r) {
                Graph g = gen_cycle(n);
                int solved = cf_solve(g, opts_).value;
                if (n <= kBruteforceMaxOrder && solved != cf_bruteforce(g).value)
                    throw std::logic_error("solver disagrees with the oracle on C_" +
                                           std::to_string(n));
                r.expected = std::to_string(*e.claimed_cf);
                r.computed = std::to_string(solved);
                r.status = solved == *e.claimed_cf ? ClaimStatus::confirmed
                                                   : ClaimStatus::discrepancy;
            });
        }
    }

    void run_coronas() {
        for (int t1 = 2; t1 <= 5; ++t1) {
            std::vector<Graph> trees = enumerate_trees(t1);
            CoronaExpectation want = corona_expected(t1);
            for (std::size_t ti = 0; ti < trees.size(); ++ti) {
                Graph t = corona_k1(trees[ti]);
                std::string tag = "T" + std::to_string(t1) + "." + std::to_string(ti + 1);
                std::string base = "corona of tree type " + std::to_string(ti + 1) +
                                   " of order " + std::to_string(t1);
                value_claim("corona.gamma_f." + tag, "gamma_f(" + base + ") = " +
                                std::to_string(want.gamma_f),
                            want.gamma_f, gamma_f(t));
                value_claim("corona.d_f." + tag,
                            "d_f(" + base + ") = " + std::to_string(want.fair_domatic),
                            want.fair_domatic, fair_domatic_number(t).value);
                value_claim("corona.cf." + tag,
                            "C_f(" + base + ") = " + std::to_string(want.cf), want.cf,
                            cf_solve(t, opts_).value);
            }
        }
    }

    void run_cubic(int order) {
        std::string prefix = "cubic" + std::to_string(order);
        CubicExpectation e = cubic_expected(order);
        if (order == 6) {
            // both stated values are index-independent, so they pin directly
            const std::vector<CatalogEntry>& entries = cubic_catalog(6);
            for (const CatalogEntry& entry : entries)
                value_claim(prefix + ".cf." + std::to_string(entry.index),
                            "C_f of each cubic graph of order 6 = 6", 6,
                            cf_solve(parse_graph6(entry.graph6), opts_).value);
            return;
        }
        claim(prefix + ".cf.multiset",
              "multiset of C_f over the cubic graphs of order " + std::to_string(order),
              [&](ClaimResult& r) {
                  std::vector<int> got;
                  for (const CatalogEntry& entry : cubic_catalog(order))
                      got.push_back(cf_solve(parse_graph6(entry.graph6), opts_).value);
                  std::sort(got.begin(), got.end());
                  r.expected = multiset_string(e.claimed_multiset);
                  r.computed = multiset_string(got);
                  r.status = got == e.claimed_multiset ? ClaimStatus::multiset_confirmed
                                                       : ClaimStatus::discrepancy;
              });
        if (order == 10) {
            claim(prefix + ".cf.petersen", "C_f of the Petersen graph = 4", [&](ClaimResult& r) {
                const CatalogEntry* pet = nullptr;
                for (const CatalogEntry& entry : cubic_catalog(10))
                    if (entry.expected_cf) pet = &entry;
                r.expected = "4";
                if (!pet) {
                    r.computed = "no pinned entry";
                    r.status = ClaimStatus::discrepancy;
                    return;
                }
                Graph g = parse_graph6(pet->graph6);
                int solved = cf_solve(g, opts_).value;
                bool iso = is_isomorphic(g, gen_petersen());
                r.computed = std::to_string(solved) + (iso ? "" : " (not the petersen graph!)");
                r.status = (solved == 4 && iso) ? ClaimStatus::confirmed
                                                : ClaimStatus::discrepancy;
            });
        }
    }

    void run_bounds() {
        claim("bound.cf_le_n_minus_gamma_f_plus_2.exhaustive",
              "C_f(G) <= n - gamma_f + 2 for every graph of order <= 6",
              [&](ClaimResult& r) {
                  int violations = 0;
                  long total = 0;
                  for (int n = 1; n <= 6; ++n)
                      for_each_graph(n, [&](const Graph& g) {
                          ++total;
                          if (cf_bruteforce(g).value > g.order() - gamma_f(g) + 2) ++violations;
                      });
                  r.expected = "0 violations";
                  r.computed = std::to_string(violations) + " violations over " +
                               std::to_string(total) + " graphs";
                  r.status =
                      violations == 0 ? ClaimStatus::confirmed : ClaimStatus::discrepancy;
              });
        claim("bound.cf_le_n_minus_gamma_f.connected",
              "C_f(G) <= n - gamma_f for every connected graph of order 3..6",
              [&](ClaimResult& r) {
                  int violations = 0;
                  bool p4_violates = false;
                  Graph p4 = gen_path(4);
                  for (int n = 3; n <= 6; ++n)
                      for_each_graph(n, [&](const Graph& g) {
                          if (!is_connected(g)) return;
                          if (cf_bruteforce(g).value > g.order() - gamma_f(g)) {
                              ++violations;
                              if (g == p4) p4_violates = true;
                          }
                      });
                  r.expected = "0 violations";
                  r.computed = std::to_string(violations) + " violations" +
                               (p4_violates ? ", including P_4" : "");
                  r.status =
                      violations == 0 ? ClaimStatus::confirmed : ClaimStatus::discrepancy;
              });
        claim("bound.cf_ge_2_d_f.exhaustive",
              "C_f(G) >= 2 d_f(G) for every graph of order 3..6 without full vertices, with a "
              "verifying constructed witness",
              [&](ClaimResult& r) {
                  int value_violations = 0, witness_failures = 0;
                  long total = 0;
                  for (int n = 3; n <= 6; ++n)
                      for_each_graph(n, [&](const Graph& g) {
                          if (!g.full_vertices().empty()) return;
                          ++total;
                          int df = fair_domatic_number(g).value;
                          if (cf_bruteforce(g).value < 2 * df) ++value_violations;
                          DomaticLowerBound lb = lower_bound_from_domatic(g);
                          bool verifies = std::holds_alternative<FcCertificate>(
                              verify_fc_partition(g, lb.witness));
                          if (!verifies || lb.witness.size() < 2 * df) ++witness_failures;
                      });
                  r.expected = "0 violations";
                  r.computed = std::to_string(value_violations) + " value violations, " +
                               std::to_string(witness_failures) + " witness failures over " +
                               std::to_string(total) + " graphs";
                  r.status = (value_violations == 0 && witness_failures == 0)
                                 ? ClaimStatus::confirmed
                                 : ClaimStatus::discrepancy;
              });
    }

private:
    SolveOptions opts_;
};

}  // namespace detail

inline ReproductionReport run_reproduction(Scope scope, const SolveOptions& opts = {}) {
    detail::ClaimRunner runner(opts);
    if (scope == Scope::all || scope == Scope::paths) runner.run_paths();
    if (scope == Scope::all || scope == Scope::cycles) runner.run_cycles();
    if (scope == Scope::all || scope == Scope::coronas) runner.run_coronas();
    if (scope == Scope::all || scope == Scope::cubic6) runner.run_cubic(6);
    if (scope == Scope::all || scope == Scope::cubic8) runner.run_cubic(8);
    if (scope == Scope::all || scope == Scope::cubic10) runner.run_cubic(10);
    if (scope == Scope::all || scope == Scope::bounds) runner.run_bounds();
    ReproductionReport report;
    report.scope = scope;
    report.claims = std::move(runner.results);
    return report;
}

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::confirmed: return "confirmed";
        case ClaimStatus::discrepancy: return "discrepancy";
        case ClaimStatus::multiset_confirmed: return "multiset-confirmed";
        case ClaimStatus::skipped: return "skipped";
    }
    return "?";
}

inline const char* to_string(Scope s) {
    switch (s) {
        case Scope::all: return "all";
        case Scope::paths: return "paths";
        case Scope::cycles: return "cycles";
        case Scope::coronas: return "coronas";
        case Scope::cubic6: return "cubic6";
        case Scope::cubic8: return "cubic8";
        case Scope::cubic10: return "cubic10";
        case Scope::bounds: return "bounds";
    }
    return "?";
}

}  // namespace faircoal
