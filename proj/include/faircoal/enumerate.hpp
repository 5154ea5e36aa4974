// Exhaustive small-graph enumeration: all labeled graphs of a given order,
// 3-regular graphs up to isomorphism, and tree isomorphism types.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "faircoal/graph.hpp"
#include "faircoal/graph6.hpp"
#include "faircoal/isomorphism.hpp"

namespace faircoal {

// Every labeled simple graph on n vertices, 2^(n(n-1)/2) of them.
// Feasible for n <= 7; callers wanting exhaustion normally stop at 6.
template <typename F>
void for_each_graph(int n, F&& visit) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        visit(g);
    }
}

namespace detail {

// Cheap isomorphism invariant: sorted per-vertex triangle counts plus the
// sorted per-vertex sums of neighbor triangle counts.
inline std::vector<int> iso_fingerprint(const Graph& g) {
    int n = g.order();
    std::vector<int> tri(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) tri[static_cast<std::size_t>(v)] += (g.neighbors(v) & g.neighbors(u)).count();
    std::vector<int> nb(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nb[static_cast<std::size_t>(v)] += tri[static_cast<std::size_t>(u)];
    std::vector<int> fp = tri;
    std::sort(fp.begin(), fp.end());
    std::sort(nb.begin(), nb.end());
    fp.insert(fp.end(), nb.begin(), nb.end());
    return fp;
}

template <typename F>
void cubic_extend(Graph& g, std::vector<int>& deg, F& leaf) {
    int n = g.order();
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (deg[static_cast<std::size_t>(i)] < 3) {
            v = i;
            break;
        }
    if (v < 0) {
        leaf(g);
        return;
    }
    int need = 3 - deg[static_cast<std::size_t>(v)];
    std::vector<int> cand;
    for (int u = v + 1; u < n; ++u)
        if (deg[static_cast<std::size_t>(u)] < 3 && !g.has_edge(v, u)) cand.push_back(u);
    if (static_cast<int>(cand.size()) < need) return;
    // choose all `need`-subsets of cand in lexicographic order
    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Graph saved = g;
        std::vector<int> sdeg = deg;
        for (int i : idx) {
            g.add_edge(v, cand[static_cast<std::size_t>(i)]);
            ++deg[static_cast<std::size_t>(v)];
            ++deg[static_cast<std::size_t>(cand[static_cast<std::size_t>(i)])];
        }
        cubic_extend(g, deg, leaf);
        g = saved;
        deg = sdeg;
        int i = need - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                             static_cast<int>(cand.size()) - need + i)
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// All 3-regular graphs of the given (even) order up to isomorphism,
// connected or not, sorted by graph6 string. Enumerates every labeled
// cubic graph once, so order 10 takes a while; orders <= 8 are instant.
inline std::vector<Graph> enumerate_cubic_graphs(int order) {
    if (order < 4 || order % 2 != 0)
        throw std::invalid_argument("3-regular graphs need even order >= 4");
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    std::vector<Graph> reps;
    Graph g(order);
    std::vector<int> deg(static_cast<std::size_t>(order), 0);
    auto leaf = [&](const Graph& h) {
        std::vector<int> fp = detail::iso_fingerprint(h);
        std::vector<std::size_t>& bucket = buckets[fp];
        for (std::size_t i : bucket)
            if (is_isomorphic(h, reps[i])) return;
        bucket.push_back(reps.size());
        reps.push_back(h);
    };
    detail::cubic_extend(g, deg, leaf);
    std::sort(reps.begin(), reps.end(),
              [](const Graph& x, const Graph& y) { return to_graph6(x) < to_graph6(y); });
    return reps;
}

// Tree isomorphism types of the given order, via Pruefer sequences.
inline std::vector<Graph> enumerate_trees(int order) {
    if (order == 1) return {Graph(1)};
    if (order == 2) return {gen_path(2)};
    std::vector<Graph> reps;
    std::vector<int> seq(static_cast<std::size_t>(order - 2), 0);
    while (true) {
        Graph t(order);
        {
            std::vector<int> deg(static_cast<std::size_t>(order), 1);
            for (int x : seq) ++deg[static_cast<std::size_t>(x)];
            for (int x : seq) {
                for (int leaf = 0; leaf < order; ++leaf)
                    if (deg[static_cast<std::size_t>(leaf)] == 1) {
                        t.add_edge(leaf, x);
                        --deg[static_cast<std::size_t>(leaf)];
                        --deg[static_cast<std::size_t>(x)];
                        break;
                    }
            }
            int a = -1, b = -1;
            for (int v = 0; v < order; ++v)
                if (deg[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
            t.add_edge(a, b);
        }
        bool fresh = true;
        for (const Graph& r : reps)
            if (is_isomorphic(t, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(t);
        int i = order - 3;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == order - 1) {
            seq[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
    return reps;
}

// Erdos-Renyi sample, deterministic in (n, edge_permille, seed).
inline Graph random_graph(int n, int edge_permille, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> roll(0, 999);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (roll(rng) < edge_permille) g.add_edge(u, v);
    return g;
}

}  // namespace faircoal
