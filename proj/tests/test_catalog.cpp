#include <catch2/catch_amalgamated.hpp>

#include "faircoal/catalog.hpp"
#include "faircoal/graph6.hpp"
#include "faircoal/isomorphism.hpp"

using namespace faircoal;

TEST_CASE("catalog counts and load-time checks") {
    CHECK(cubic_catalog(6).size() == 2);
    CHECK(cubic_catalog(8).size() == 6);
    CHECK(cubic_catalog(10).size() == 21);
    CHECK_THROWS_AS(cubic_catalog(12), std::invalid_argument);
    CHECK_THROWS_AS(cubic_catalog(4), std::invalid_argument);
}

TEST_CASE("catalog entries are 3-regular and round-trip") {
    for (int order : {6, 8, 10}) {
        for (const CatalogEntry& e : cubic_catalog(order)) {
            Graph g = parse_graph6(e.graph6);
            CHECK(g.order() == order);
            for (int v = 0; v < order; ++v) CHECK(g.degree(v) == 3);
            CHECK(to_graph6(g) == e.graph6);
            CHECK(is_connected(g) == e.connected);
        }
    }
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
    for (int order : {6, 8, 10}) {
        const std::vector<CatalogEntry>& cat = cubic_catalog(order);
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = i + 1; j < cat.size(); ++j)
                CHECK_FALSE(
                    is_isomorphic(parse_graph6(cat[i].graph6), parse_graph6(cat[j].graph6)));
    }
}

TEST_CASE("disconnected entries decompose as expected") {
    // order 8: exactly one disconnected entry, K_4 + K_4
    const std::vector<CatalogEntry>& c8 = cubic_catalog(8);
    std::vector<const CatalogEntry*> disc8;
    for (const CatalogEntry& e : c8)
        if (!e.connected) disc8.push_back(&e);
    REQUIRE(disc8.size() == 1);
    Graph two_k4(8);
    for (int b : {0, 4})
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) two_k4.add_edge(b + u, b + v);
    CHECK(is_isomorphic(parse_graph6(disc8[0]->graph6), two_k4));

    // order 10: exactly two disconnected entries, K_4 + each order-6 entry
    const std::vector<CatalogEntry>& c10 = cubic_catalog(10);
    std::vector<Graph> disc10;
    for (const CatalogEntry& e : c10)
        if (!e.connected) disc10.push_back(parse_graph6(e.graph6));
    REQUIRE(disc10.size() == 2);
    for (const CatalogEntry& six : cubic_catalog(6)) {
        Graph expect(10);
        Graph six_graph = parse_graph6(six.graph6);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) expect.add_edge(u, v);
        for (int u = 0; u < 6; ++u)
            for (int v : six_graph.neighbors(u))
                if (u < v) expect.add_edge(4 + u, 4 + v);
        CHECK((is_isomorphic(expect, disc10[0]) || is_isomorphic(expect, disc10[1])));
    }
}

TEST_CASE("pinned expectations") {
    for (const CatalogEntry& e : cubic_catalog(6)) {
        REQUIRE(e.expected_cf.has_value());
        CHECK(*e.expected_cf == 6);
    }
    int pinned10 = 0;
    for (const CatalogEntry& e : cubic_catalog(10))
        if (e.expected_cf) {
            ++pinned10;
            CHECK(*e.expected_cf == 4);
            CHECK(is_isomorphic(parse_graph6(e.graph6), gen_petersen()));
        }
    CHECK(pinned10 == 1);
    for (const CatalogEntry& e : cubic_catalog(8)) CHECK_FALSE(e.expected_cf.has_value());
}

TEST_CASE("frozen cf values agree with the pinned ones") {
    for (int order : {6, 8, 10})
        for (const CatalogEntry& e : cubic_catalog(order))
            if (e.expected_cf) CHECK(e.cf == *e.expected_cf);
}
