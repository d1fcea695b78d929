#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "qec/errors.hpp"
#include "qec/graph.hpp"
#include "qec/random.hpp"

using namespace qec;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph(0, {}), InvalidArgument);
    CHECK_THROWS_AS(Graph(Graph::kMaxVertices + 1, {}), InvalidArgument);
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), InvalidArgument);
    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph(3, out_of_range), InvalidArgument);

    const std::vector<Edge> dup{{0, 1}, {1, 0}, {1, 2}};
    const Graph g(3, dup);
    CHECK(g.size() == 2);
    CHECK(g == path(3));
}

TEST_CASE("builder toggles edges") {
    GraphBuilder b(4);
    b.add_edge(0, 1);
    b.toggle_edge(1, 0);
    b.toggle_edge(2, 3);
    const Graph g = std::move(b).build();
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.adjacent(3, 2));
    CHECK(g.size() == 1);
}

TEST_CASE("basic families") {
    CHECK(complete(6).size() == 15);
    CHECK(empty(4).size() == 0);
    CHECK(cycle(7).size() == 7);
    CHECK(path(5).size() == 4);
    CHECK(complete_bipartite(3, 4).size() == 12);
    CHECK_THROWS_AS(cycle(2), InvalidArgument);
    CHECK(is_complete(complete(5)));
    CHECK(is_complete(complete(1)));
    CHECK_FALSE(is_complete(cycle(4)));

    const Graph c = cycle(6);
    const std::vector<Edge> expected{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CHECK(c.edges() == expected);
    CHECK(c.neighbours(0) == std::vector<Vertex>{1, 5});
}

TEST_CASE("operations") {
    const Graph g = join(cycle(5), complete(1));
    CHECK(g.order() == 6);
    CHECK(g.size() == 10);
    CHECK(g.degree(5) == 5);

    const Graph u = disjoint_union(complete(3), path(2));
    CHECK(u.order() == 5);
    CHECK(u.size() == 4);
    CHECK_FALSE(is_connected(u));
    CHECK(copies(3, complete(2)).size() == 3);

    // double: adjacency [[A, A], [A, A]], so K_2 doubles to C_4 and P_3 to K_{2,4}.
    const Graph d = double_graph(complete(2));
    CHECK(regularity(d) == std::optional<std::size_t>(2));
    CHECK(girth(d) == std::optional<std::size_t>(4));
    CHECK(double_graph(path(3)).size() == 4 * 2);
    CHECK(double_graph(complete(3)).size() == 15 - 3);

    // lex with K_2: K_n blows up to K_{2n}.
    CHECK(lex_k2(complete(3)) == complete(6));
    CHECK(lex_k2(path(3)).size() == 4 * 2 + 3);

    CHECK(complement(complete(4)) == empty(4));
    CHECK(complement(complement(petersen())) == petersen());

    CHECK(line_graph(complete(4)).size() == 12);
    CHECK(line_graph(complete_bipartite(1, 3)) == complete(3));
    CHECK_THROWS_AS(line_graph(empty(3)), InvalidArgument);

    const Graph k = cartesian(complete(3), complete(3));
    CHECK(k == grid(3));
    CHECK(regularity(cartesian(path(2), path(2))) == std::optional<std::size_t>(2));
    CHECK(girth(cartesian(path(2), path(2))) == std::optional<std::size_t>(4));
}

TEST_CASE("seidel switching") {
    const std::vector<Vertex> s{0};
    const Graph g = seidel_switch(complete(3), s);
    CHECK(g.size() == 1);
    const std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(seidel_switch(complete(3), bad), InvalidArgument);
}

TEST_CASE("queries") {
    CHECK(clique_number(petersen()) == 2);
    CHECK(clique_number(complete(6)) == 6);
    CHECK(clique_number(triangular(8)) == 7);
    CHECK(girth(petersen()) == std::optional<std::size_t>(5));
    CHECK(girth(hoffman_singleton()) == std::optional<std::size_t>(5));
    CHECK_FALSE(girth(path(5)).has_value());
    CHECK(common_neighbours(complete(5), 0, 1) == 3);
    CHECK_FALSE(regularity(path(4)).has_value());

    const std::vector<Vertex> sub{0, 1, 2};
    CHECK(induced_subgraph(cycle(5), sub) == path(3));
}

TEST_CASE("strongly regular constructions agree with brute-force counting") {
    struct Case {
        const char* name;
        Graph g;
        SrgParams p;
    };
    const std::vector<Case> cases{
        {"C5", cycle(5), {5, 2, 0, 1}},
        {"petersen", petersen(), {10, 3, 0, 1}},
        {"shrikhande", shrikhande(), {16, 6, 2, 2}},
        {"clebsch", clebsch(), {16, 10, 6, 6}},
        {"schlafli", schlafli(), {27, 16, 10, 8}},
        {"T(5)", triangular(5), {10, 6, 3, 4}},
        {"T(8)", triangular(8), {28, 12, 6, 4}},
        {"grid(4)", grid(4), {16, 6, 2, 2}},
        {"chang1", chang(1), {28, 12, 6, 4}},
        {"chang2", chang(2), {28, 12, 6, 4}},
        {"chang3", chang(3), {28, 12, 6, 4}},
        {"hoffman_singleton", hoffman_singleton(), {50, 7, 0, 1}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto p = srg_parameters(c.g);
        REQUIRE(p.has_value());
        CHECK(*p == c.p);
        CHECK(p->feasible());
        SrgParams brute;
        REQUIRE(oracle::srg_by_counting(c.g, brute));
        CHECK(brute == c.p);
    }
    CHECK_FALSE(srg_parameters(path(4)).has_value());
    CHECK_FALSE(srg_parameters(complete(5)).has_value());
}

TEST_CASE("shrikhande and chang graphs are not the lattice and triangular graphs") {
    // Same parameters, different local structure: the grid's neighbourhoods are two
    // disjoint triangles, the Shrikhande graph's are hexagons.
    CHECK(clique_number(shrikhande()) == 3);
    CHECK(clique_number(grid(4)) == 4);
    for (int i = 1; i <= 3; ++i) CHECK(clique_number(chang(i)) < 7);
    CHECK_THROWS_AS(chang(4), InvalidArgument);
}

TEST_CASE("edge-list round trip and errors") {
    const Graph g = petersen();
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK(from_edge_list(to_edge_list(empty(3))) == empty(3));

    const Graph h = from_edge_list("# comment\n0 1\n\n  1   2\n1 0\n");
    CHECK(h == path(3));
    CHECK(from_edge_list("n 4\n0 1\n").order() == 4);

    auto line_of = [](const char* text) {
        try {
            from_edge_list(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::size_t{0};
    };
    CHECK(line_of("0 1\n1 x\n") == 2);
    CHECK(line_of("0 1\n2 2\n") == 2);
    CHECK(line_of("n 2\n0 5\n") == 2);
    CHECK(line_of("0 1 2\n") == 1);
    CHECK(line_of("0 -1\n") == 1);
    CHECK_THROWS_AS(from_edge_list(""), ParseError);
}

TEST_CASE("random connected graphs are connected and reproducible") {
    Rng a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = a.between(3, 12);
        CHECK(n == b.between(3, 12));
        const Graph g = random_connected_graph(a, n, 0.3);
        CHECK(g == random_connected_graph(b, n, 0.3));
        CHECK(is_connected(g));
        CHECK(g.order() == n);
    }
}
