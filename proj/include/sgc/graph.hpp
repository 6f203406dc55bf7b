#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgc {

using Vertex = int;
using EdgeId = int;

/// A set of edge ids over some host graph. Kept sorted by the operations
/// that produce one; consumers validate ids against their host.
using EdgeSet = std::vector<EdgeId>;

// Thrown for malformed input: bad ids, unparsable files, bad flags. CLI exit 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation's precondition fails (non-bipartite host,
// edge set that is not a strong clique, ...). CLI exit 3.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computed quantity violates a proven bound. This must never
// happen; if it does, either the implementation is broken or the instance
// is a genuine counterexample. CLI exit 4, never swallowed.
struct bound_violation : std::logic_error {
    explicit bound_violation(const std::string& msg) : std::logic_error(msg) {}
};

struct Edge {
    Vertex u;
    Vertex v;
};

/// Undirected multigraph on a fixed vertex set 0..n-1. Parallel edges are
/// distinct edge ids, loops are rejected. Edge ids are assigned in insertion
/// order and stable afterwards; all algorithms treat a built Graph as
/// immutable, so it is safe to share across threads read-only.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<size_t>(check_n(n))) {}

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }

    EdgeId add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw input_error("loop edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") not allowed");
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({u, v});
        adj_[static_cast<size_t>(u)].push_back(id);
        adj_[static_cast<size_t>(v)].push_back(id);
        return id;
    }

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const {
        check_edge(e);
        return edges_[static_cast<size_t>(e)];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    /// The endpoint of edge e that is not v.
    Vertex other(EdgeId e, Vertex v) const {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }

    bool incident(EdgeId e, Vertex v) const {
        const Edge& ed = edge(e);
        return ed.u == v || ed.v == v;
    }

    /// Ids of edges incident to v, in insertion order. Parallel edges appear once each.
    const std::vector<EdgeId>& incident_edges(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    /// Degree with multiplicity: parallel edges each contribute one.
    int degree(Vertex v) const { return static_cast<int>(incident_edges(v).size()); }

    int max_degree() const {
        int best = 0;
        for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
        return best;
    }

    /// True iff at least one edge joins u and v.
    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& au = adj_[static_cast<size_t>(u)];
        const auto& av = adj_[static_cast<size_t>(v)];
        const auto& scan = au.size() <= av.size() ? au : av;
        Vertex target = au.size() <= av.size() ? v : u;
        for (EdgeId e : scan)
            if (incident(e, target)) return true;
        return false;
    }

    bool has_parallel_edges() const {
        std::vector<std::pair<Vertex, Vertex>> keys;
        keys.reserve(edges_.size());
        for (const Edge& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(keys.begin(), keys.end());
        return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n())
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n()) + ")");
    }

    void check_edge(EdgeId e) const {
        if (e < 0 || e >= m())
            throw input_error("edge id " + std::to_string(e) + " out of range [0," +
                              std::to_string(m()) + ")");
    }

private:
    static int check_n(int n) {
        if (n < 0) throw input_error("negative vertex count");
        return n;
    }

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adj_;
};

struct Bipartition {
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
};

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }
inline int max_degree(const Graph& g) { return g.max_degree(); }

/// BFS distances from a set of source vertices; -1 marks unreachable.
inline std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        g.check_vertex(s);
        if (dist[static_cast<size_t>(s)] != 0) {
            dist[static_cast<size_t>(s)] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (EdgeId e : g.incident_edges(v)) {
            Vertex w = g.other(e, v);
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// Shortest-path edge count, or nullopt when v is unreachable from u.
/// Unreachable is a distinct value on purpose; it must never enter arithmetic.
inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    const Vertex src[1] = {u};
    int d = bfs_distances(g, src)[static_cast<size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
}

/// Induced subgraph together with the vertex and edge relabelings.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;   // induced vertex -> original vertex
    std::vector<Vertex> to_induced;    // original vertex -> induced vertex, -1 if dropped
    std::vector<EdgeId> edge_to_original;
};

/// G[S]: all edges with both ends in S. Vertices of S are relabeled to
/// 0..|S|-1 in increasing original order; edges keep their relative order.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<Vertex> verts(s.begin(), s.end());
    for (Vertex v : verts) g.check_vertex(v);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    InducedSubgraph out;
    out.to_original = verts;
    out.to_induced.assign(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < verts.size(); ++i)
        out.to_induced[static_cast<size_t>(verts[i])] = static_cast<Vertex>(i);

    out.graph = Graph(static_cast<int>(verts.size()));
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edge(e);
        Vertex iu = out.to_induced[static_cast<size_t>(ed.u)];
        Vertex iv = out.to_induced[static_cast<size_t>(ed.v)];
        if (iu >= 0 && iv >= 0) {
            out.graph.add_edge(iu, iv);
            out.edge_to_original.push_back(e);
        }
    }
    return out;
}

/// 2-coloring check. Deterministic side assignment: within each connected
/// component the smallest-index vertex goes to side A. Returns nullopt iff
/// an odd cycle exists. The bipartition is always computed, never trusted
/// from input.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n()), -1);
    for (Vertex start = 0; start < g.n(); ++start) {
        if (color[static_cast<size_t>(start)] != -1) continue;
        color[static_cast<size_t>(start)] = 0;
        std::queue<Vertex> q;
        q.push(start);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident_edges(v)) {
                Vertex w = g.other(e, v);
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition p;
    for (Vertex v = 0; v < g.n(); ++v)
        (color[static_cast<size_t>(v)] == 0 ? p.side_a : p.side_b).push_back(v);
    return p;
}

/// Side lookup for a bipartition: side[v] is 0 for A, 1 for B. Validates
/// that the two sides partition V(G) and that every edge crosses.
inline std::vector<int> side_of(const Graph& g, const Bipartition& p) {
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    auto place = [&](const std::vector<Vertex>& vs, int s) {
        for (Vertex v : vs) {
            g.check_vertex(v);
            if (side[static_cast<size_t>(v)] != -1)
                throw precondition_error("bipartition sides overlap at vertex " +
                                         std::to_string(v));
            side[static_cast<size_t>(v)] = s;
        }
    };
    place(p.side_a, 0);
    place(p.side_b, 1);
    for (Vertex v = 0; v < g.n(); ++v)
        if (side[static_cast<size_t>(v)] == -1)
            throw precondition_error("bipartition misses vertex " + std::to_string(v));
    for (const Edge& e : g.edges())
        if (side[static_cast<size_t>(e.u)] == side[static_cast<size_t>(e.v)])
            throw precondition_error("edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ") does not cross the bipartition");
    return side;
}

/// Cross non-edges of a simple bipartite graph: E(G') = {ab : a in A, b in B,
/// ab not in E(G)}. Involution on simple bipartite graphs with a fixed
/// bipartition. Edges are emitted in (a ascending, b ascending) order.
inline Graph bipartite_complement(const Graph& g, const Bipartition& p) {
    if (g.has_parallel_edges())
        throw input_error("bipartite_complement: parallel edges unsupported");
    side_of(g, p);
    std::vector<Vertex> as = p.side_a, bs = p.side_b;
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    Graph out(g.n());
    for (Vertex a : as)
        for (Vertex b : bs)
            if (!g.adjacent(a, b)) out.add_edge(a, b);
    return out;
}

}  // namespace sgc
