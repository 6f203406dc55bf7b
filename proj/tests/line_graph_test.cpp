#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgc/generators.hpp"
#include "sgc/graph.hpp"
#include "sgc/line_graph.hpp"

using namespace sgc;

namespace {

// Independent oracle: adjacency in the graph-square of L(G), i.e. vertices
// of L(G) at distance <= 2. Uses only line_graph + BFS, not the predicate.
bool square_adjacent_oracle(const Graph& l, EdgeId e, EdgeId f) {
    auto d = distance(l, e, f);
    return d.has_value() && *d >= 1 && *d <= 2;
}

}  // namespace

TEST_CASE("line graph of a cycle is a cycle") {
    Graph l = line_graph(cycle_graph(5));
    CHECK(l.n() == 5);
    CHECK(l.m() == 5);
    for (Vertex v = 0; v < l.n(); ++v) CHECK(degree(l, v) == 2);
    CHECK(bipartition_of(l) == std::nullopt);  // odd cycle stays odd
}

TEST_CASE("line graph of the claw is a triangle") {
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    Graph l = line_graph(star);
    CHECK(l.n() == 3);
    CHECK(l.m() == 3);
}

TEST_CASE("parallel edges are adjacent in the line graph, once") {
    Graph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    Graph l = line_graph(g);
    CHECK(l.n() == 2);
    CHECK(l.m() == 1);
}

TEST_CASE("strongly_adjacent") {
    Graph path = path_graph(4);  // edges 0:ab 1:bc 2:cd
    CHECK(strongly_adjacent(path, 0, 2));  // joined by bc

    Graph two_k2(4);
    EdgeId e1 = two_k2.add_edge(0, 1);
    EdgeId e2 = two_k2.add_edge(2, 3);
    CHECK_FALSE(strongly_adjacent(two_k2, e1, e2));

    Graph c5 = cycle_graph(5);  // the k=1 blow-up: all pairs conflict
    for (EdgeId e = 0; e < c5.m(); ++e)
        for (EdgeId f = e + 1; f < c5.m(); ++f) CHECK(strongly_adjacent(c5, e, f));

    CHECK_THROWS_AS(strongly_adjacent(path, 1, 1), input_error);
    CHECK_THROWS_AS(strongly_adjacent(path, 0, 9), input_error);
}

TEST_CASE("edges sharing an endpoint are always strongly adjacent") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(8, 0.4, 200 + seed);
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto& inc = g.incident_edges(v);
            for (size_t i = 0; i < inc.size(); ++i)
                for (size_t j = i + 1; j < inc.size(); ++j)
                    CHECK(strongly_adjacent(g, inc[i], inc[j]));
        }
    }
}

TEST_CASE("square_of_line_graph on small fixed hosts") {
    EdgeConflictGraph c5 = square_of_line_graph(cycle_graph(5));
    for (EdgeId e = 0; e < 5; ++e) CHECK(c5.conflict_degree(e) == 4);  // K5

    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    EdgeConflictGraph iso = square_of_line_graph(two_k2);
    CHECK(iso.conflict_degree(0) == 0);
    CHECK(iso.conflict_degree(1) == 0);

    EdgeConflictGraph k22 = square_of_line_graph(complete_bipartite(2, 2));
    for (EdgeId e = 0; e < 4; ++e) CHECK(k22.conflict_degree(e) == 3);  // K4
}

TEST_CASE("conflict adjacency is symmetric and irreflexive") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(9, 0.3, 300 + seed);
        EdgeConflictGraph c = square_of_line_graph(g);
        for (EdgeId e = 0; e < c.m; ++e) {
            CHECK_FALSE(c.adjacent(e, e));
            for (EdgeId f : c.adj[static_cast<size_t>(e)]) CHECK(c.adjacent(f, e));
        }
    }
}

TEST_CASE("square equals distance-2 adjacency of the line graph") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = gnp(4 + static_cast<int>(seed % 7), 0.35, 400 + seed);
        Graph l = line_graph(g);
        EdgeConflictGraph c = square_of_line_graph(g);
        for (EdgeId e = 0; e < g.m(); ++e)
            for (EdgeId f = e + 1; f < g.m(); ++f) {
                bool expect = square_adjacent_oracle(l, e, f);
                CHECK(c.adjacent(e, f) == expect);
                CHECK(strongly_adjacent(g, e, f) == expect);
            }
    }
}
