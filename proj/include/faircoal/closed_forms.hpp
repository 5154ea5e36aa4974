// Closed-form expectations for the solved families (paths, cycles, coronas
// of trees, cubic catalogs), the partition constructions the family proofs
// describe, and the per-instance record of where exact computation confirms
// or corrects the stated formulas.
//
// Every table entry below was computed by the exhaustive oracle up to order
// 11 and by the branch-and-bound solver (cross-run with pruning disabled)
// beyond that. Where the stated formula disagrees with exact computation the
// entry carries both numbers and is tagged oracle_corrected; the computed
// value is authoritative.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "faircoal/catalog.hpp"
#include "faircoal/coalition.hpp"
#include "faircoal/graph.hpp"
#include "faircoal/partition.hpp"

namespace faircoal {

enum class Family { path, cycle, corona, cubic6, cubic8, cubic10 };

enum class Validity {
    trusted,          // stated formula confirmed exactly at this parameter
    oracle_corrected, // exact value differs from the stated formula
    multiset_only,    // only the family-wide multiset is pinned externally
};

struct Expectation {
    Family family;
    int parameter;                  // order, tree order, or catalog index
    int expected_cf;                // authoritative exact value
    std::optional<int> claimed_cf;  // stated formula value when one exists
    Validity validity;
    std::string statement;
};

namespace detail {

// C_f(P_n), exact, n = 2..15. The formula claims 4 for every n >= 2.
inline constexpr int kPathCf[] = {0, 0, 2, 3, 4, 4, 4, 5, 4, 5, 5, 5, 6, 5, 6, 6};
inline constexpr int kPathMax = 15;

// C_f(C_n), exact, n = 4..15. The formula claims 6/5/4 for n = 3k/3k+1/3k+2.
inline constexpr int kCycleCf[] = {0, 0, 0, 0, 4, 4, 6, 5, 4, 6, 6, 5, 6, 6, 6, 6};
inline constexpr int kCycleMax = 15;

inline int cycle_claim(int n) { return n % 3 == 0 ? 6 : (n % 3 == 1 ? 5 : 4); }

// the 3k case is only claimed from k = 2 (n = 6) onward
inline bool cycle_has_claim(int n) { return n % 3 != 0 || n >= 6; }

}  // namespace detail

inline Expectation expected_cf(Family family, int parameter) {
    Expectation e;
    e.family = family;
    e.parameter = parameter;
    switch (family) {
        case Family::path: {
            if (parameter < 2 || parameter > detail::kPathMax)
                throw std::out_of_range("path expectations cover n = 2.." +
                                        std::to_string(detail::kPathMax));
            e.expected_cf = detail::kPathCf[parameter];
            e.claimed_cf = 4;
            e.validity = (e.expected_cf == 4) ? Validity::trusted : Validity::oracle_corrected;
            e.statement = "C_f(P_" + std::to_string(parameter) + ") = 4";
            return e;
        }
        case Family::cycle: {
            if (parameter < 4 || parameter > detail::kCycleMax)
                throw std::out_of_range("cycle expectations cover n = 4.." +
                                        std::to_string(detail::kCycleMax));
            e.expected_cf = detail::kCycleCf[parameter];
            int claim = detail::cycle_claim(parameter);
            e.claimed_cf = claim;
            e.validity = (e.expected_cf == claim) ? Validity::trusted : Validity::oracle_corrected;
            e.statement = "C_f(C_" + std::to_string(parameter) + ") = " + std::to_string(claim);
            return e;
        }
        case Family::corona: {
            if (parameter < 2)
                throw std::out_of_range("corona expectations need tree order >= 2");
            e.expected_cf = 4;
            e.claimed_cf = 4;
            e.validity = Validity::trusted;
            e.statement = "C_f(T o K_1) = 4 for a tree T of order " + std::to_string(parameter);
            return e;
        }
        case Family::cubic6:
        case Family::cubic8:
        case Family::cubic10: {
            int order = family == Family::cubic6 ? 6 : family == Family::cubic8 ? 8 : 10;
            const std::vector<CatalogEntry>& entries = cubic_catalog(order);
            if (parameter < 1 || parameter > static_cast<int>(entries.size()))
                throw std::out_of_range("catalog index out of range");
            const CatalogEntry& entry = entries[static_cast<std::size_t>(parameter - 1)];
            e.expected_cf = entry.cf;
            e.claimed_cf = entry.expected_cf;  // engaged only for pinned entries
            e.validity = entry.expected_cf ? Validity::trusted : Validity::multiset_only;
            e.statement = "C_f of cubic graph " + std::to_string(parameter) + " of order " +
                          std::to_string(order);
            return e;
        }
    }
    throw std::invalid_argument("unknown family");
}

// (gamma_f, fair domatic number, C_f) stated for the corona of any tree of
// order >= 2 with K_1; confirmed exhaustively for tree orders 2..6.
struct CoronaExpectation {
    int gamma_f;
    int fair_domatic;
    int cf;
};

inline CoronaExpectation corona_expected(int t1_order) {
    if (t1_order < 2) throw std::out_of_range("corona expectations need tree order >= 2");
    return {t1_order, 2, 4};
}

// Stated multiset of C_f over a cubic catalog, plus index-pinned entries.
struct CubicExpectation {
    std::vector<int> claimed_multiset;   // as stated for the family, sorted
    std::vector<int> computed_multiset;  // exact values over our catalog, sorted
    std::vector<std::pair<int, int>> pinned;  // (1-based catalog index, expected value)
};

inline CubicExpectation cubic_expected(int order) {
    CubicExpectation e;
    switch (order) {
        case 6:
            e.claimed_multiset = {6, 6};
            break;
        case 8:
            e.claimed_multiset = {5, 5, 6, 8, 8, 8};
            break;
        case 10:
            e.claimed_multiset = {4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 7, 7, 7, 7, 7, 7, 7};
            break;
        default:
            throw std::invalid_argument("cubic catalogs exist for orders 6, 8, 10");
    }
    const std::vector<CatalogEntry>& entries = cubic_catalog(order);
    for (const CatalogEntry& entry : entries) {
        e.computed_multiset.push_back(entry.cf);
        if (entry.expected_cf) e.pinned.emplace_back(entry.index, *entry.expected_cf);
    }
    std::sort(e.computed_multiset.begin(), e.computed_multiset.end());
    return e;
}

// --- proof constructions ----------------------------------------------------
// Transcribed literally, off-by-ones and all, so that verification failures
// document gaps in the source construction rather than transcription fixes.
// Callers must verify; the *_verified variants fall back to a solver witness.

inline Partition path_witness(int n) {
    if (n < 4) throw std::invalid_argument("path construction needs n >= 4");
    Partition p;
    p.classes.assign(4, VertexSet{});
    if (n % 2 == 0) {
        // vertices v_1, v_2, ... assigned round-robin to A_1..A_4
        for (int v = 0; v < n; ++v) p.classes[static_cast<std::size_t>(v % 4)].add(v);
    } else {
        // A_1 = {v_1..v_{2k-4}, v_2k}, A_2 = {v_{2k-3}}, A_3 = {v_{2k-2}, v_{2k+1}},
        // A_4 = {v_{2k-1}}, written 0-based below
        int k = (n - 1) / 2;
        for (int v = 1; v <= 2 * k - 4; ++v) p.classes[0].add(v - 1);
        p.classes[0].add(2 * k - 1);
        p.classes[1].add(2 * k - 4);
        p.classes[2].add(2 * k - 3);
        p.classes[2].add(2 * k);
        p.classes[3].add(2 * k - 2);
    }
    return p;
}

inline Partition cycle_witness(int n) {
    if (n < 6) throw std::invalid_argument("cycle construction needs n >= 6");
    Partition p;
    auto add_run = [&p](int cls, int from, int to) {  // 1-based, step 3
        for (int v = from; v <= to; v += 3) p.classes[static_cast<std::size_t>(cls)].add(v - 1);
    };
    if (n % 3 == 0) {
        int k = n / 3;
        int m = 3 * k / 2;  // floor
        p.classes.assign(6, VertexSet{});
        if (k % 2 == 1) {
            add_run(0, 1, m);
            add_run(1, 2, m + 1);
            add_run(2, 3, m + 2);
            add_run(3, m + 3, 3 * k - 2);
            add_run(4, m + 4, 3 * k - 1);
            add_run(5, m + 5, 3 * k);
        } else {
            add_run(0, 1, m - 2);
            add_run(1, 2, m - 1);
            add_run(2, 3, m);
            add_run(3, m + 1, 3 * k - 2);
            add_run(4, m + 2, 3 * k - 1);
            add_run(5, m + 3, 3 * k);
        }
    } else if (n % 3 == 1) {
        int k = (n - 1) / 3;
        p.classes.assign(5, VertexSet{});
        add_run(0, 1, 3 * k - 5);
        add_run(1, 2, 3 * k - 4);
        add_run(2, 3, 3 * k - 3);
        p.classes[3].add(3 * k - 2 - 1);
        p.classes[3].add(3 * k + 1 - 1);
        p.classes[4].add(3 * k - 1 - 1);
        p.classes[4].add(3 * k - 1);
    } else {
        int k = (n - 2) / 3;
        p.classes.assign(4, VertexSet{});
        for (int v = 1; v <= 3 * k - 1; ++v) p.classes[0].add(v - 1);
        p.classes[1].add(3 * k - 1);
        p.classes[2].add(3 * k);
        p.classes[3].add(3 * k + 1);
    }
    return p;
}

struct VerifiedWitness {
    Partition partition;
    bool construction_verified;  // false: solver witness substituted
};

namespace detail {

inline VerifiedWitness verify_or_solve(const Graph& g, Partition candidate) {
    if (std::holds_alternative<FcCertificate>(verify_fc_partition(g, candidate)))
        return {std::move(candidate), true};
    return {cf_solve(g).witness, false};
}

}  // namespace detail

inline VerifiedWitness path_witness_verified(int n) {
    return detail::verify_or_solve(gen_path(n), path_witness(n));
}

inline VerifiedWitness cycle_witness_verified(int n) {
    return detail::verify_or_solve(gen_cycle(n), cycle_witness(n));
}

}  // namespace faircoal
