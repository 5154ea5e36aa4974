#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "faircoal/catalog.hpp"
#include "faircoal/enumerate.hpp"
#include "faircoal/graph6.hpp"

using namespace faircoal;

TEST_CASE("for_each_graph hits every labeled graph once") {
    long count = 0;
    int edges_total = 0;
    for_each_graph(3, [&](const Graph& g) {
        ++count;
        edges_total += g.edge_count();
    });
    CHECK(count == 8);
    CHECK(edges_total == 12);  // each of the 3 slots set in half of the graphs

    count = 0;
    for_each_graph(4, [&](const Graph&) { ++count; });
    CHECK(count == 64);
}

TEST_CASE("cubic enumeration matches the embedded catalog") {
    std::vector<Graph> c4 = enumerate_cubic_graphs(4);
    REQUIRE(c4.size() == 1);
    CHECK(is_isomorphic(c4[0], gen_complete(4)));

    for (int order : {6, 8}) {
        std::vector<Graph> found = enumerate_cubic_graphs(order);
        const std::vector<CatalogEntry>& cat = cubic_catalog(order);
        REQUIRE(found.size() == cat.size());
        for (std::size_t i = 0; i < found.size(); ++i)
            CHECK(to_graph6(found[i]) == cat[i].graph6);  // same sort order, byte-equal
    }

    CHECK_THROWS_AS(enumerate_cubic_graphs(5), std::invalid_argument);
}

// The order-10 run enumerates ~11.2M labeled graphs; kept out of the default
// suite. Run with:  faircoal_tests "[cubic10-regen]"
TEST_CASE("cubic order 10 regenerates from scratch", "[.][cubic10-regen]") {
    std::vector<Graph> found = enumerate_cubic_graphs(10);
    const std::vector<CatalogEntry>& cat = cubic_catalog(10);
    REQUIRE(found.size() == cat.size());
    for (std::size_t i = 0; i < found.size(); ++i)
        CHECK(to_graph6(found[i]) == cat[i].graph6);
}

TEST_CASE("tree enumeration by isomorphism type") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(2).size() == 1);
    CHECK(enumerate_trees(3).size() == 1);
    CHECK(enumerate_trees(4).size() == 2);  // path, star
    CHECK(enumerate_trees(5).size() == 3);  // path, star, spider
    CHECK(enumerate_trees(6).size() == 6);
    for (const Graph& t : enumerate_trees(5)) {
        CHECK(t.edge_count() == 4);
        CHECK(is_connected(t));
    }
}

TEST_CASE("random graphs are deterministic in the seed") {
    CHECK(random_graph(9, 400, 5) == random_graph(9, 400, 5));
    CHECK(random_graph(9, 0, 5) == Graph(9));
    CHECK(random_graph(5, 1000, 5) == gen_complete(5));
}
