// Embedded catalog of the 3-regular graphs of orders 6, 8, and 10 up to
// isomorphism (2, 6, and 21 graphs; disconnected ones included).
//
// The graph6 strings were generated once by the exhaustive enumerator in
// enumerate.hpp (see tools/gen_cubic_catalog.cpp to regenerate) and are
// sorted lexicographically, which fixes the catalog indices. The cf field
// freezes the exact fair coalition number of each entry; expected_cf is set
// only where an external statement pins an individual entry: both order-6
// graphs and the entry isomorphic to the Petersen graph.
//
// Loading decodes every entry and re-checks regularity, connectivity flags,
// round-trips, pairwise non-isomorphism, and the counts.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "faircoal/enumerate.hpp"
#include "faircoal/graph.hpp"
#include "faircoal/graph6.hpp"
#include "faircoal/isomorphism.hpp"

namespace faircoal {

struct CatalogEntry {
    int order;
    int index;  // 1-based within the catalog of its order
    std::string graph6;
    bool connected;
    std::optional<int> expected_cf;  // externally pinned entries only
    int cf;                          // exact value, frozen from the solver
};

namespace detail {

struct RawEntry {
    const char* graph6;
    bool connected;
    int pinned;  // -1 when not pinned
    int cf;
};

inline constexpr RawEntry kCubic6[] = {
    {"Es\\o", true, 6, 6},  // K_{3,3}
    {"E{Sw", true, 6, 6},   // triangular prism
};

inline constexpr RawEntry kCubic8[] = {
    {"GsXPGs", true, -1, 6},
    {"GsXP_[", true, -1, 8},
    {"G{O_ww", true, -1, 5},
    {"G{S_g[", true, -1, 6},
    {"G}GOW[", true, -1, 8},
    {"G~?GW[", false, -1, 8},  // K_4 + K_4
};

inline constexpr RawEntry kCubic10[] = {
    {"IsP@PGXD_", true, 4, 4},  // Petersen
    {"IsX@?oU@o", true, -1, 5},
    {"IsXP?_J@o", true, -1, 6},
    {"IsXP?cH@g", true, -1, 6},
    {"IsXP?cI@W", true, -1, 7},
    {"IsX___J@o", true, -1, 5},
    {"I{O_ogH@g", true, -1, 5},
    {"I{O_ogI@W", true, -1, 5},
    {"I{O_ogK?w", true, -1, 7},
    {"I{O_ooE@W", true, -1, 5},
    {"I{O_w_H@W", true, -1, 5},
    {"I{S__OF@o", true, -1, 5},
    {"I{S__SE@W", true, -1, 6},
    {"I{S_gOD?w", true, -1, 5},
    {"I}GOOOF@o", true, -1, 7},
    {"I}GOOSE@W", true, -1, 7},
    {"I}GOWOD?w", true, -1, 7},
    {"I}GWOGB?w", true, -1, 5},
    {"I}KGGGB?w", true, -1, 6},
    {"I~?GOOF@o", false, -1, 7},  // K_4 + K_{3,3}
    {"I~?GWOD?w", false, -1, 7},  // K_4 + prism
};

inline std::vector<CatalogEntry> load_catalog(int order, const RawEntry* raw, int count) {
    std::vector<CatalogEntry> entries;
    std::vector<Graph> graphs;
    for (int i = 0; i < count; ++i) {
        const RawEntry& r = raw[i];
        Graph g = parse_graph6(r.graph6);
        if (g.order() != order)
            throw std::logic_error("catalog entry has the wrong order: " + std::string(r.graph6));
        for (int v = 0; v < order; ++v)
            if (g.degree(v) != 3)
                throw std::logic_error("catalog entry is not 3-regular: " + std::string(r.graph6));
        if (is_connected(g) != r.connected)
            throw std::logic_error("catalog connectivity flag is wrong: " + std::string(r.graph6));
        if (to_graph6(g) != r.graph6)
            throw std::logic_error("catalog entry does not round-trip: " + std::string(r.graph6));
        CatalogEntry e;
        e.order = order;
        e.index = i + 1;
        e.graph6 = r.graph6;
        e.connected = r.connected;
        if (r.pinned >= 0) e.expected_cf = r.pinned;
        e.cf = r.cf;
        entries.push_back(std::move(e));
        graphs.push_back(std::move(g));
    }
    // pairwise non-isomorphism; the fingerprint separates most pairs cheaply
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (detail::iso_fingerprint(graphs[static_cast<std::size_t>(i)]) ==
                    detail::iso_fingerprint(graphs[static_cast<std::size_t>(j)]) &&
                is_isomorphic(graphs[static_cast<std::size_t>(i)],
                              graphs[static_cast<std::size_t>(j)]))
                throw std::logic_error("catalog entries " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " of order " +
                                       std::to_string(order) + " are isomorphic");
    return entries;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& cubic_catalog(int order) {
    switch (order) {
        case 6: {
            static const std::vector<CatalogEntry> c6 = detail::load_catalog(6, detail::kCubic6, 2);
            return c6;
        }
        case 8: {
            static const std::vector<CatalogEntry> c8 = detail::load_catalog(8, detail::kCubic8, 6);
            return c8;
        }
        case 10: {
            static const std::vector<CatalogEntry> c10 =
                detail::load_catalog(10, detail::kCubic10, 21);
            return c10;
        }
        default:
            throw std::invalid_argument("cubic catalogs exist for orders 6, 8, 10");
    }
}

}  // namespace faircoal
