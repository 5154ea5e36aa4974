#include <catch2/catch_amalgamated.hpp>

#include "faircoal/graph.hpp"

using namespace faircoal;

TEST_CASE("vertex sets behave like small sets") {
    VertexSet s{0, 3, 5};
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.first() == 0);
    CHECK((s - VertexSet{0}).first() == 3);
    CHECK((s | VertexSet{1}).count() == 4);
    CHECK((s & VertexSet{3, 5, 7}) == VertexSet{3, 5});
    CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
    CHECK(VertexSet::first_n(64).count() == 64);

    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 3, 5});
}

TEST_CASE("graph construction enforces the invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate collapses
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.neighbors(0) == VertexSet{1});

    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_NOTHROW(Graph(64));

    // symmetry of the adjacency rows
    Graph h = gen_petersen();
    for (int u = 0; u < h.order(); ++u)
        for (int v : h.neighbors(u)) CHECK(h.neighbors(v).contains(u));
}

TEST_CASE("family generators have the right degree structure") {
    CHECK(gen_path(1) == Graph(1));
    CHECK(gen_path(2).edge_count() == 1);
    Graph p5 = gen_path(5);
    CHECK(p5.degree_sequence() == std::vector<int>{1, 1, 2, 2, 2});

    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    Graph c3 = gen_cycle(3);
    CHECK(c3 == gen_complete(3));
    for (int v = 0; v < 6; ++v) CHECK(gen_cycle(6).degree(v) == 2);

    CHECK(gen_empty(4).edge_count() == 0);
    CHECK(gen_complete(5).edge_count() == 10);

    Graph pet = gen_petersen();
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(girth(pet) == 5);
}

TEST_CASE("full vertices") {
    CHECK(gen_complete(4).full_vertices() == VertexSet::first_n(4));
    CHECK(gen_path(4).full_vertices().empty());
    CHECK(Graph(1).full_vertices() == VertexSet{0});  // vacuously full
    Graph star(4);
    for (int v = 1; v < 4; ++v) star.add_edge(0, v);
    CHECK(star.full_vertices() == VertexSet{0});
}

TEST_CASE("corona attaches one pendant per vertex") {
    CHECK(corona_k1(Graph(1)).edge_count() == 1);  // K_1 o K_1 = P_2

    Graph p4 = corona_k1(gen_path(2));
    CHECK(p4.order() == 4);
    CHECK(p4.degree_sequence() == gen_path(4).degree_sequence());

    Graph c = corona_k1(gen_complete(3));
    CHECK(c.order() == 6);
    CHECK(c.degree_sequence() == std::vector<int>{1, 1, 1, 3, 3, 3});

    // order doubles and exactly g.order() edges are added
    Graph pet = gen_petersen();
    Graph cp = corona_k1(pet);
    CHECK(cp.order() == 20);
    CHECK(cp.edge_count() == pet.edge_count() + pet.order());

    CHECK_THROWS_AS(corona_k1(Graph(40)), std::invalid_argument);
}

TEST_CASE("random trees are reproducible spanning trees") {
    CHECK(gen_random_tree(1, 3) == Graph(1));
    CHECK(gen_random_tree(2, 9) == gen_path(2));
    for (std::uint64_t seed : {0u, 7u, 123u}) {
        for (int n : {3, 5, 9, 16}) {
            Graph t = gen_random_tree(n, seed);
            CHECK(t.edge_count() == n - 1);
            CHECK(is_connected(t));
            CHECK(t == gen_random_tree(n, seed));
        }
    }
    CHECK(gen_random_tree(5, 7) == gen_random_tree(5, 7));
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("4\n0 1\n1 2\n2 3") == gen_path(4));
    SECTION("duplicates collapse, isolated vertices persist") {
        Graph g = parse_edge_list("3\n0 1\n1 0");
        CHECK(g.edge_count() == 1);
        CHECK(g.degree(2) == 0);
    }
    SECTION("order of lines is irrelevant") {
        CHECK(parse_edge_list("4\n2 3\n0 1\n1 2") == gen_path(4));
    }
    SECTION("comments and blank lines are ignored") {
        CHECK(parse_edge_list("# a path\n4\n\n0 1\n1 2 # middle\n2 3\n") == gen_path(4));
    }
    SECTION("errors are distinct") {
        CHECK_THROWS_MATCHES(parse_edge_list("2\n0 0"), parse_error,
                             Catch::Matchers::Predicate<parse_error>([](const parse_error& e) {
                                 return e.kind() == parse_error::Kind::loop_edge;
                             }));
        CHECK_THROWS_MATCHES(parse_edge_list("2\n0 5"), parse_error,
                             Catch::Matchers::Predicate<parse_error>([](const parse_error& e) {
                                 return e.kind() == parse_error::Kind::vertex_out_of_range;
                             }));
        CHECK_THROWS_MATCHES(parse_edge_list("2\n0 x"), parse_error,
                             Catch::Matchers::Predicate<parse_error>([](const parse_error& e) {
                                 return e.kind() == parse_error::Kind::bad_token;
                             }));
        CHECK_THROWS_MATCHES(parse_edge_list(""), parse_error,
                             Catch::Matchers::Predicate<parse_error>([](const parse_error& e) {
                                 return e.kind() == parse_error::Kind::bad_header;
                             }));
        CHECK_THROWS_AS(parse_edge_list("70\n0 1"), parse_error);
    }
    SECTION("round trip through to_edge_list") {
        for (const Graph& g : {gen_petersen(), gen_path(7), gen_empty(3)})
            CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}
