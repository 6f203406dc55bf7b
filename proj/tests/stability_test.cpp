#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sgc/generators.hpp"
#include "sgc/solver.hpp"
#include "sgc/stability.hpp"

using namespace sgc;

namespace {

Graph k55_minus(std::vector<std::pair<int, int>> missing) {
    Graph g(10);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            bool skip = false;
            for (auto [ma, mb] : missing) skip |= (a == ma && b == mb);
            if (!skip) g.add_edge(a, 5 + b);
        }
    return g;
}

bool is_complete_across(const Graph& g, const std::vector<Vertex>& xs,
                        const std::vector<Vertex>& ys) {
    for (Vertex x : xs)
        for (Vertex y : ys)
            if (!g.adjacent(x, y)) return false;
    return true;
}

}  // namespace

TEST_CASE("refine_neighborhoods on complete bipartite hosts") {
    Graph k55 = complete_bipartite(5, 5);
    auto p = *bipartition_of(k55);
    RefineResult r = refine_neighborhoods(k55, p, all_edges(k55));
    CHECK(r.a_prime.size() == 5);
    CHECK(r.b_prime.size() == 5);
    CHECK(r.e_a_size == 0);
    CHECK(r.e_b_size == 0);
    CHECK(r.s_a.empty());
    CHECK(r.s_b.empty());

    Graph k11 = complete_bipartite(1, 1);
    auto p1 = *bipartition_of(k11);
    RefineResult r1 = refine_neighborhoods(k11, p1, all_edges(k11));
    CHECK(r1.a_prime == std::vector<Vertex>{0});
    CHECK(r1.b_prime == std::vector<Vertex>{1});
}

TEST_CASE("refine_neighborhoods keeps enough edges on a dented host") {
    Graph g = k55_minus({{0, 0}});
    auto p = *bipartition_of(g);
    EdgeSet h = all_edges(g);  // still a strong clique with one edge gone
    RefineResult r = refine_neighborhoods(g, p, h);
    CHECK(r.e_a_size == 0);
    // retained >= (1 - 2 eps - 2 sqrt(eps)) Delta^2 with eps = 1/25
    int retained = 0;
    std::vector<char> in_a(10, 0), in_b(10, 0);
    for (Vertex v : r.a_prime) in_a[static_cast<size_t>(v)] = 1;
    for (Vertex v : r.b_prime) in_b[static_cast<size_t>(v)] = 1;
    for (EdgeId e : h) {
        const Edge& ed = g.edge(e);
        bool u_in = in_a[static_cast<size_t>(ed.u)] || in_b[static_cast<size_t>(ed.u)];
        bool v_in = in_a[static_cast<size_t>(ed.v)] || in_b[static_cast<size_t>(ed.v)];
        if (u_in && v_in) ++retained;
    }
    double eps = 1.0 / 25.0;
    CHECK(retained >= std::ceil((1 - 2 * eps - 2 * std::sqrt(eps)) * 25) - 1e-9);
    CHECK(retained == 24);

    CHECK_THROWS_AS(refine_neighborhoods(g, p, {}), precondition_error);
}

TEST_CASE("maximum bipartite matching") {
    Graph three_edges(6);
    three_edges.add_edge(0, 3);
    three_edges.add_edge(1, 4);
    three_edges.add_edge(2, 5);
    auto p3 = *bipartition_of(three_edges);
    CHECK(max_matching_bipartite(three_edges, p3).size() == 3);

    Graph k33 = complete_bipartite(3, 3);
    CHECK(max_matching_bipartite(k33, *bipartition_of(k33)).size() == 3);

    Graph star = complete_bipartite(1, 4);
    CHECK(max_matching_bipartite(star, *bipartition_of(star)).size() == 1);

    CHECK(max_matching_bipartite(Graph(4), Bipartition{{0, 1, 2, 3}, {}}).empty());
}

TEST_CASE("matching is deterministic") {
    Graph g = random_bipartite(6, 6, 0.5, 31);
    auto p = *bipartition_of(g);
    CHECK(max_matching_bipartite(g, p) == max_matching_bipartite(g, p));
}

TEST_CASE("konig cover on fixed instances") {
    Graph three_edges(6);
    three_edges.add_edge(0, 3);
    three_edges.add_edge(1, 4);
    three_edges.add_edge(2, 5);
    auto p = *bipartition_of(three_edges);
    auto m = max_matching_bipartite(three_edges, p);
    auto cover = konig_cover(three_edges, p, m);
    CHECK(cover.size() == 3);

    Graph k33 = complete_bipartite(3, 3);
    auto pk = *bipartition_of(k33);
    auto cover_k = konig_cover(k33, pk, max_matching_bipartite(k33, pk));
    CHECK(cover_k == std::vector<Vertex>{0, 1, 2});  // one full side

    CHECK(konig_cover(Graph(2), Bipartition{{0}, {1}}, {}).empty());
}

TEST_CASE("konig cover rejects non-matchings and non-maximum matchings") {
    Graph k33 = complete_bipartite(3, 3);
    auto p = *bipartition_of(k33);
    CHECK_THROWS_AS(konig_cover(k33, p, std::vector<EdgeId>{0, 1}), precondition_error);  // share vertex 0
    CHECK_THROWS_AS(konig_cover(k33, p, std::vector<EdgeId>{0}), precondition_error);     // augmentable
}

TEST_CASE("konig duality and cover validity on random bipartite graphs") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n1 = 2 + static_cast<int>(seed % 19), n2 = 2 + static_cast<int>((seed * 7) % 19);
        Graph g = random_bipartite(n1, n2, 0.3, 2000 + seed);
        // bipartition_of may flip sides per component; use the generator's own sides
        Bipartition gen_p;
        for (int v = 0; v < n1; ++v) gen_p.side_a.push_back(v);
        for (int v = 0; v < n2; ++v) gen_p.side_b.push_back(n1 + v);
        auto m = max_matching_bipartite(g, gen_p);
        auto cover = konig_cover(g, gen_p, m);
        CHECK(cover.size() == m.size());
        std::vector<char> in_cover(static_cast<size_t>(g.n()), 0);
        for (Vertex v : cover) in_cover[static_cast<size_t>(v)] = 1;
        for (const Edge& e : g.edges())
            CHECK((in_cover[static_cast<size_t>(e.u)] || in_cover[static_cast<size_t>(e.v)]));
    }
}

TEST_CASE("extract_biclique on complete and dented hosts") {
    Graph k55 = complete_bipartite(5, 5);
    auto p = *bipartition_of(k55);
    StabilityWitness w = extract_biclique(k55, p, all_edges(k55), 5);
    CHECK(w.alpha == 0.0);
    CHECK(w.matching_size == 0);
    CHECK(w.r_found == 5);
    CHECK(w.r_guaranteed == 5);

    Graph dent = k55_minus({{0, 0}});
    auto pd = *bipartition_of(dent);
    StabilityWitness wd = extract_biclique(dent, pd, all_edges(dent), 5);
    CHECK(wd.alpha == doctest::Approx(0.04));
    CHECK(wd.matching_size == 1);
    CHECK(wd.cover_size == 1);
    CHECK(wd.r_found == 4);
    CHECK(wd.r_guaranteed == 4);  // ceil((1 - sqrt(0.08)) * 5)
    CHECK(is_complete_across(dent, wd.biclique_a, wd.biclique_b));
}

TEST_CASE("extract_biclique when the complement has a perfect matching") {
    // K_{3,3} minus a perfect matching; its largest strong clique is a path
    // of three consecutive C6 edges
    Graph holes(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) holes.add_edge(a, 3 + b);
    auto p = *bipartition_of(holes);
    SolveResult sol = max_strong_clique(holes);
    CHECK(sol.omega == 3);
    StabilityWitness w = extract_biclique(holes, p, sol.witness, 3);
    CHECK(w.matching_size == 3);
    CHECK(w.r_found == 0);
    CHECK(w.r_guaranteed == 0);  // alpha = 2/3 makes the guarantee vacuous
}

TEST_CASE("stability pipeline on K_{6,6}") {
    Graph k66 = complete_bipartite(6, 6);
    StabilityWitness w = stability_pipeline(k66, all_edges(k66));
    CHECK(w.epsilon == 0.0);
    CHECK(w.r_found == 6);
    CHECK(w.r_guaranteed == 6);
    CHECK(w.e_a_size == 0);
    CHECK(w.e_b_size == 0);
}

TEST_CASE("stability pipeline on K_{6,6} minus a 2-matching") {
    Graph g(12);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if ((a == 0 && b == 0) || (a == 1 && b == 1)) continue;
            g.add_edge(a, 6 + b);
        }
    // the 34 remaining edges are not a strong clique; use the maximum one
    CHECK(verify_strong_clique(g, all_edges(g)).has_value());
    SolveResult sol = max_strong_clique(g);
    CHECK(sol.omega == 33);
    StabilityWitness w = stability_pipeline(g, sol.witness);
    CHECK(w.epsilon == doctest::Approx(3.0 / 36.0));
    CHECK(w.r_guarantee_real < 1.0);  // vacuous at this epsilon
    CHECK(w.r_guaranteed == 0);
    CHECK(w.r_found == 4);
    CHECK(is_complete_across(g, w.biclique_a, w.biclique_b));
}

TEST_CASE("pipeline rejects non-bipartite hosts") {
    Graph c5 = cycle_graph(5);
    CHECK_THROWS_AS(stability_pipeline(c5, all_edges(c5)), precondition_error);
}

TEST_CASE("guarantees over random bipartite hosts") {
    int done = 0;
    for (uint64_t seed = 2100; done < 30; ++seed) {
        int side = 3 + static_cast<int>(seed % 6);
        double prob = (seed % 3 == 0) ? 1.0 : 0.85;
        Graph g = random_bipartite(side, side, prob, seed);
        if (g.m() == 0) continue;
        SolveResult sol = max_strong_clique(g);
        StabilityWitness w = stability_pipeline(g, sol.witness);  // asserts internally
        CHECK(w.r_found >= w.r_guaranteed);
        CHECK(is_complete_across(g, w.biclique_a, w.biclique_b));
        CHECK(static_cast<int>(w.biclique_a.size()) == w.r_found);
        CHECK(static_cast<int>(w.biclique_b.size()) == w.r_found);

        // neighborhood refinement keeps at least (1 - 2eps - 2 sqrt(eps)) Delta^2 edges
        int delta = max_degree(g);
        double eps = std::clamp(
            1.0 - static_cast<double>(sol.witness.size()) / (static_cast<double>(delta) * delta),
            0.0, 1.0);
        std::vector<char> keep(static_cast<size_t>(g.n()), 0);
        for (Vertex v : w.a_prime) keep[static_cast<size_t>(v)] = 1;
        for (Vertex v : w.b_prime) keep[static_cast<size_t>(v)] = 1;
        int retained = 0;
        for (EdgeId e : sol.witness) {
            const Edge& ed = g.edge(e);
            if (keep[static_cast<size_t>(ed.u)] && keep[static_cast<size_t>(ed.v)]) ++retained;
        }
        double floor_guarantee = (1 - 2 * eps - 2 * std::sqrt(eps)) * delta * delta;
        if (floor_guarantee > 0) CHECK(retained >= std::ceil(floor_guarantee - 1e-9));
        ++done;
    }
}
