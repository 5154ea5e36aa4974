// Graph isomorphism for small orders: iterated neighborhood-color
// refinement to cut candidates, then backtracking over color classes.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "faircoal/graph.hpp"

namespace faircoal {

namespace detail {

// Stable colors under "my color + multiset of neighbor colors" refinement.
inline std::vector<int> refined_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<int>, int> index;
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            for (int u : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto [it, _] = index.emplace(sig[static_cast<std::size_t>(v)],
                                         static_cast<int>(index.size()));
            next[static_cast<std::size_t>(v)] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline std::vector<int> color_histogram(const std::vector<int>& color) {
    std::vector<int> h(color.size(), 0);
    for (int c : color) ++h[static_cast<std::size_t>(c)];
    std::sort(h.begin(), h.end());
    return h;
}

inline bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& ca,
                           const std::vector<int>& cb, std::vector<int>& map,
                           std::vector<bool>& used, int v) {
    int n = a.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (ca[static_cast<std::size_t>(v)] != cb[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[static_cast<std::size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = true;
        if (extend_mapping(a, b, ca, cb, map, used, v + 1)) return true;
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

}  // namespace detail

// Intended for orders up to ~12; exact for any input it accepts.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;

    std::vector<int> ca = detail::refined_colors(a);
    std::vector<int> cb = detail::refined_colors(b);
    // refined_colors numbers classes by first appearance, so histograms are
    // comparable only as multisets; remap both through a canonical signature.
    if (detail::color_histogram(ca) != detail::color_histogram(cb)) return false;

    // Refinement numbers classes by first appearance, so the two sides may
    // give the same class different ids. Recolor through a class-invariant
    // key (size, member degree, neighbor-class-size multiset); classes that
    // share a key merge, which only widens the candidate sets below.
    auto canonical_ids = [](const Graph& g, std::vector<int>& color) {
        int n = g.order();
        std::vector<int> size(color.size(), 0);
        for (int c : color) ++size[static_cast<std::size_t>(c)];
        std::map<int, std::vector<int>> members;
        for (int v = 0; v < n; ++v) members[color[static_cast<std::size_t>(v)]].push_back(v);
        std::map<std::vector<int>, std::vector<int>> by_key;
        for (auto& [c, vs] : members) {
            std::vector<int> key{static_cast<int>(vs.size()), g.degree(vs.front())};
            std::vector<int> nb;
            for (int u : g.neighbors(vs.front()))
                nb.push_back(size[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])]);
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            by_key[key].push_back(c);
        }
        std::map<int, int> remap;
        int next = 0;
        for (auto& [key, ids] : by_key) {
            (void)key;
            for (int c : ids) remap[c] = next;
            ++next;
        }
        for (int& c : color) c = remap[c];
    };
    canonical_ids(a, ca);
    canonical_ids(b, cb);
    if (detail::color_histogram(ca) != detail::color_histogram(cb)) return false;

    std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.order()), false);
    return detail::extend_mapping(a, b, ca, cb, map, used, 0);
}

}  // namespace faircoal
