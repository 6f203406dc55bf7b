#pragma once

#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Adjacency of the square of the line graph: one vertex per edge of the
/// host, edge ids e and f adjacent iff the host edges are at distance at
/// most 2 in L(host). Symmetric, irreflexive.
struct EdgeConflictGraph {
    const Graph* host = nullptr;  // non-owning; must outlive this object
    int m = 0;
    std::vector<std::vector<EdgeId>> adj;  // sorted neighbor lists

    bool adjacent(EdgeId e, EdgeId f) const {
        const auto& a = adj[static_cast<size_t>(e)];
        return std::binary_search(a.begin(), a.end(), f);
    }

    int conflict_degree(EdgeId e) const {
        return static_cast<int>(adj[static_cast<size_t>(e)].size());
    }
};

/// L(G): one vertex per edge of G, vertices adjacent iff the edges share an
/// endpoint. Parallel edges of G share both endpoints, hence are adjacent.
/// The result is simple even when G is not.
inline Graph line_graph(const Graph& g) {
    Graph l(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ee = g.edge(e);
        // collect every edge sharing an endpoint with e, once
        for (Vertex v : {ee.u, ee.v}) {
            for (EdgeId f : g.incident_edges(v)) {
                if (f <= e) continue;
                if (v == ee.v && g.incident(f, ee.u)) continue;  // already added via u
                l.add_edge(e, f);
            }
        }
    }
    return l;
}

/// True iff e and f are at distance <= 2 in L(G): they share an endpoint, or
/// some edge of G joins an endpoint of e to an endpoint of f.
inline bool strongly_adjacent(const Graph& g, EdgeId e, EdgeId f) {
    g.check_edge(e);
    g.check_edge(f);
    if (e == f) throw input_error("strongly_adjacent: identical edge ids");
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
    for (Vertex v : {a.u, a.v})
        for (EdgeId mid : g.incident_edges(v)) {
            Vertex w = g.other(mid, v);
            if (w == b.u || w == b.v) return true;
        }
    return false;
}

/// Materializes L(G)^2 adjacency over edge ids. For each edge e = uv the
/// conflict set is exactly the edges incident to {u,v} or to a neighbor of
/// u or v, which avoids the pairwise predicate.
inline EdgeConflictGraph square_of_line_graph(const Graph& g) {
    EdgeConflictGraph c;
    c.host = &g;
    c.m = g.m();
    c.adj.assign(static_cast<size_t>(g.m()), {});

    std::vector<int> mark(static_cast<size_t>(g.m()), -1);
    std::vector<int> vmark(static_cast<size_t>(g.n()), -1);
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ee = g.edge(e);
        // ball of radius 1 around the endpoints of e
        std::vector<Vertex> ball;
        auto push_vertex = [&](Vertex v) {
            if (vmark[static_cast<size_t>(v)] != e) {
                vmark[static_cast<size_t>(v)] = e;
                ball.push_back(v);
            }
        };
        push_vertex(ee.u);
        push_vertex(ee.v);
        for (Vertex v : {ee.u, ee.v})
            for (EdgeId f : g.incident_edges(v)) push_vertex(g.other(f, v));

        auto& out = c.adj[static_cast<size_t>(e)];
        for (Vertex v : ball)
            for (EdgeId f : g.incident_edges(v)) {
                if (f == e || mark[static_cast<size_t>(f)] == e) continue;
                mark[static_cast<size_t>(f)] = e;
                out.push_back(f);
            }
        std::sort(out.begin(), out.end());
    }
    return c;
}

}  // namespace sgc
