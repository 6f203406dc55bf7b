#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sgc/generators.hpp"
#include "sgc/solver.hpp"

using namespace sgc;

TEST_CASE("verify_strong_clique") {
    Graph k44 = complete_bipartite(4, 4);
    CHECK_FALSE(verify_strong_clique(k44, all_edges(k44)).has_value());

    // K_{3,3} minus the perfect matching {a_i b_i}: edges in lex order are
    // 0:(0,4) 1:(0,5) 2:(1,3) 3:(1,5) 4:(2,3) 5:(2,4)
    Graph holes(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) holes.add_edge(a, 3 + b);
    auto fail = verify_strong_clique(holes, all_edges(holes));
    REQUIRE(fail.has_value());
    CHECK(fail->first == 0);   // a1 b2
    CHECK(fail->second == 2);  // a2 b1

    CHECK_FALSE(verify_strong_clique(holes, {}).has_value());
    CHECK_FALSE(verify_strong_clique(holes, {3}).has_value());
    CHECK_THROWS_AS(verify_strong_clique(holes, EdgeSet{0, 0}), input_error);
    CHECK_THROWS_AS(verify_strong_clique(holes, EdgeSet{99}), input_error);
}

TEST_CASE("brute force oracle on named instances") {
    CHECK(brute_force_omega(cycle_graph(5)) == 5);
    CHECK(brute_force_omega(complete_bipartite(2, 2)) == 4);
    Graph single(2);
    single.add_edge(0, 1);
    CHECK(brute_force_omega(single) == 1);
    CHECK(brute_force_omega(Graph(3)) == 0);
    CHECK_THROWS_AS(brute_force_omega(complete_bipartite(5, 5)), input_error);  // 25 > 20
}

TEST_CASE("max_strong_clique on the paper families") {
    SolveResult g2 = max_strong_clique(cycle_blowup(5, 2));
    CHECK(g2.omega == 20);  // 1.25 * Delta^2 with Delta = 4
    CHECK(g2.witness.size() == 20);

    CHECK(max_strong_clique(complete_bipartite(4, 4)).omega == 16);
    SolveResult empty = max_strong_clique(Graph(5));
    CHECK(empty.omega == 0);
    CHECK(empty.witness.empty());
}

TEST_CASE("greedy clique is a verified lower bound") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gnp(8, 0.5, 700 + seed);
        EdgeSet greedy = greedy_strong_clique(g);
        CHECK_FALSE(verify_strong_clique(g, greedy).has_value());
        if (g.m() > 0) CHECK(greedy.size() >= 1);
        CHECK(static_cast<int>(greedy.size()) <= max_strong_clique(g).omega);
    }
}

TEST_CASE("oracle equivalence on seeded random graphs") {
    int checked = 0;
    uint64_t seed = 800;
    while (checked < 60) {
        Graph g = gnp(4 + static_cast<int>(seed % 6), 0.2 + 0.2 * static_cast<double>(seed % 3),
                      seed);
        ++seed;
        if (g.m() > 18) continue;
        INFO("seed ", seed - 1);
        CHECK(max_strong_clique(g).omega == brute_force_omega(g));
        ++checked;
    }
}

TEST_CASE("oracle equivalence on multigraphs") {
    int done = 0;
    for (uint64_t seed = 850; done < 20; ++seed) {
        Graph base = gnp(6, 0.4, seed);
        if (base.m() < 1 || base.m() > 17) continue;
        Graph g(base.n(), base.edges());
        g.add_edge(base.edge(0).u, base.edge(0).v);  // parallel copy
        INFO("seed ", seed);
        CHECK(max_strong_clique(g).omega == brute_force_omega(g));
        ++done;
    }
    // parallel bundles alone form strong cliques of their multiplicity
    Graph bundle(2);
    for (int i = 0; i < 4; ++i) bundle.add_edge(0, 1);
    CHECK(max_strong_clique(bundle).omega == 4);
}

TEST_CASE("witness always verifies and counters move") {
    Graph g = gnp(9, 0.5, 901);
    SolveResult r = max_strong_clique(g);
    CHECK_FALSE(verify_strong_clique(g, r.witness).has_value());
    CHECK(static_cast<int>(r.witness.size()) == r.omega);
    CHECK(r.elapsed_ms >= 0.0);
    CHECK(r.deterministic_witness);
}

TEST_CASE("omega is schedule independent") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gnp(10, 0.45, 1000 + seed);
        SolveResult one = max_strong_clique(g);
        SolveOptions par;
        par.threads = 4;
        SolveResult four = max_strong_clique(g, par);
        CHECK(one.omega == four.omega);
        CHECK_FALSE(four.deterministic_witness);
        CHECK_FALSE(verify_strong_clique(g, four.witness).has_value());
    }
}

TEST_CASE("adding an edge never decreases omega") {
    std::mt19937_64 rng(77);
    for (int chain = 0; chain < 5; ++chain) {
        int n = 7;
        Graph g = gnp(n, 0.15, 1100 + static_cast<uint64_t>(chain));
        int prev = max_strong_clique(g).omega;
        for (int step = 0; step < 6; ++step) {
            Vertex u = static_cast<Vertex>(rng() % n);
            Vertex v = static_cast<Vertex>(rng() % n);
            if (u == v) continue;
            Graph next(n, g.edges());
            next.add_edge(u, v);
            g = next;
            int cur = max_strong_clique(g).omega;
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("solved instances respect the proven bounds") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gnp(8, 0.5, 1200 + seed);
        SolveResult r = max_strong_clique(g);  // throws bound_violation on failure
        OreReport ore = ore_degree(g, all_edges(g));
        CHECK(fits_bound(r.omega, static_cast<double>(ore.sigma_G) * ore.sigma_G / 3.0));
        CHECK(fits_bound(r.omega, 4.0 * ore.delta_G * ore.delta_G / 3.0));
    }
}
