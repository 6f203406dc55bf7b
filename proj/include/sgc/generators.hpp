#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sgc/graph.hpp"

namespace sgc {

/// Cycle blow-up: c blobs of k independent vertices, consecutive blobs
/// completely joined. Blob i holds vertices i*k .. i*k+k-1; edges are
/// emitted blob by blob, lexicographically within each join. c*k vertices,
/// c*k^2 edges, max degree 2k.
inline Graph cycle_blowup(int c, int k) {
    if (c < 3) throw input_error("cycle_blowup: need c >= 3");
    if (k < 1) throw input_error("cycle_blowup: need k >= 1");
    Graph g(c * k);
    for (int i = 0; i < c; ++i) {
        int j = (i + 1) % c;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) g.add_edge(i * k + a, j * k + b);
    }
    return g;
}

/// K_{p,q} with side A = 0..p-1, side B = p..p+q-1, edges in lex order.
inline Graph complete_bipartite(int p, int q) {
    if (p < 0 || q < 0) throw input_error("complete_bipartite: negative side size");
    Graph g(p + q);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) g.add_edge(a, p + b);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 0) throw input_error("path: negative vertex count");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

namespace detail {
// One uniform deviate in [0,1) from the top 53 bits of an mt19937_64 draw.
// Avoids std::uniform_real_distribution, whose output is not pinned by the
// standard; this way seeded generation is reproducible bit-for-bit.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace detail

/// Erdos-Renyi G(n,p): each pair {i<j}, scanned in lexicographic order,
/// becomes an edge independently with probability p.
inline Graph gnp(int n, double p, uint64_t seed) {
    if (n < 0) throw input_error("gnp: negative vertex count");
    if (p < 0.0 || p > 1.0) throw input_error("gnp: probability outside [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (detail::next_unit(rng) < p) g.add_edge(i, j);
    return g;
}

/// Random bipartite graph: sides 0..n1-1 and n1..n1+n2-1, each cross pair
/// independently with probability p, scanned in lexicographic order.
inline Graph random_bipartite(int n1, int n2, double p, uint64_t seed) {
    if (n1 < 0 || n2 < 0) throw input_error("random_bipartite: negative side size");
    if (p < 0.0 || p > 1.0) throw input_error("random_bipartite: probability outside [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n1 + n2);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            if (detail::next_unit(rng) < p) g.add_edge(a, n1 + b);
    return g;
}

/// Stream of every labeled simple graph on n vertices, one per edge subset,
/// in lexicographic edge-mask order. Pair k of the mask is the k-th pair in
/// (0,1),(0,2),...,(0,n-1),(1,2),... order. Capped at n <= 7.
class AllGraphsStream {
public:
    explicit AllGraphsStream(int n) : n_(n) {
        if (n < 0) throw input_error("all_graphs: negative vertex count");
        if (n > 7) throw input_error("all_graphs: n > 7 refused (2^(n(n-1)/2) graphs)");
        int pairs = n * (n - 1) / 2;
        pair_u_.reserve(static_cast<size_t>(pairs));
        pair_v_.reserve(static_cast<size_t>(pairs));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pair_u_.push_back(i);
                pair_v_.push_back(j);
            }
        end_ = uint64_t{1} << pairs;
    }

    uint64_t count() const { return end_; }
    bool done() const { return next_ >= end_; }

    Graph next() {
        uint64_t mask = next_++;
        Graph g(n_);
        for (size_t k = 0; k < pair_u_.size(); ++k)
            if (mask >> k & 1) g.add_edge(pair_u_[k], pair_v_[k]);
        return g;
    }

    /// Graph for a specific edge mask, independent of stream position.
    Graph at(uint64_t mask) const {
        Graph g(n_);
        for (size_t k = 0; k < pair_u_.size(); ++k)
            if (mask >> k & 1) g.add_edge(pair_u_[k], pair_v_[k]);
        return g;
    }

private:
    int n_;
    std::vector<Vertex> pair_u_, pair_v_;
    uint64_t next_ = 0;
    uint64_t end_ = 0;
};

struct GeneratorSpec {
    std::string family;            // cycle_blowup | complete_bipartite | path | cycle | gnp | random_bipartite
    std::vector<double> params;    // family-specific
    uint64_t seed = 0;
};

inline Graph make_graph(const GeneratorSpec& spec) {
    const auto& p = spec.params;
    auto want = [&](size_t k) {
        if (p.size() != k)
            throw input_error("generator '" + spec.family + "' expects " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(p.size()));
    };
    if (spec.family == "cycle_blowup") {
        want(2);
        return cycle_blowup(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (spec.family == "complete_bipartite") {
        want(2);
        return complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (spec.family == "path") {
        want(1);
        return path_graph(static_cast<int>(p[0]));
    }
    if (spec.family == "cycle") {
        want(1);
        return cycle_graph(static_cast<int>(p[0]));
    }
    if (spec.family == "gnp") {
        want(2);
        return gnp(static_cast<int>(p[0]), p[1], spec.seed);
    }
    if (spec.family == "random_bipartite") {
        want(3);
        return random_bipartite(static_cast<int>(p[0]), static_cast<int>(p[1]), p[2], spec.seed);
    }
    throw input_error("unknown generator family '" + spec.family + "'");
}

}  // namespace sgc
