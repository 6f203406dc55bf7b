#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "sgc/bounds.hpp"
#include "sgc/graph.hpp"
#include "sgc/line_graph.hpp"

namespace sgc {

namespace detail {

// Flat 64-bit-word bitset sized at construction. Everything the clique
// kernel needs and nothing else.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : w_(static_cast<size_t>((n + 63) / 64), 0) {}

    void set(int i) { w_[static_cast<size_t>(i >> 6)] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i >> 6)] &= ~(uint64_t{1} << (i & 63)); }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    int first() const {  // -1 when empty
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    void and_assign(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }

    void and_not_assign(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<uint64_t> w_;
};

}  // namespace detail

struct SolveOptions {
    int threads = 1;
};

struct SolveResult {
    int omega = 0;
    EdgeSet witness;  // sorted edge ids, size == omega
    uint64_t nodes_explored = 0;
    uint64_t bound_prunes = 0;
    double elapsed_ms = 0;
    bool deterministic_witness = true;
};

/// Checks that every distinct pair of H is strongly adjacent. Returns
/// nullopt on success, otherwise the lexicographically smallest failing
/// pair (by edge id).
inline std::optional<std::pair<EdgeId, EdgeId>> verify_strong_clique(const Graph& g,
                                                                     const EdgeSet& h) {
    EdgeSet ids = h;
    for (EdgeId e : ids) g.check_edge(e);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw input_error("verify_strong_clique: duplicate edge id in H");
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (!strongly_adjacent(g, ids[i], ids[j])) return std::make_pair(ids[i], ids[j]);
    return std::nullopt;
}

namespace detail {

// Shared state of one exact search over the conflict graph. Vertices are
// edge ids of the host, permuted into decreasing-conflict-degree order
// (ties by smallest edge id).
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, const EdgeConflictGraph& conflict) {
        nv_ = conflict.m;
        order_.resize(static_cast<size_t>(nv_));
        for (int i = 0; i < nv_; ++i) order_[static_cast<size_t>(i)] = i;
        std::sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
            int da = conflict.conflict_degree(a), db = conflict.conflict_degree(b);
            return da != db ? da > db : a < b;
        });
        std::vector<int> pos(static_cast<size_t>(nv_));
        for (int i = 0; i < nv_; ++i) pos[static_cast<size_t>(order_[static_cast<size_t>(i)])] = i;

        adj_.assign(static_cast<size_t>(nv_), Bits(nv_));
        weight_.resize(static_cast<size_t>(nv_));
        for (EdgeId e = 0; e < nv_; ++e) {
            int pe = pos[static_cast<size_t>(e)];
            for (EdgeId f : conflict.adj[static_cast<size_t>(e)])
                adj_[static_cast<size_t>(pe)].set(pos[static_cast<size_t>(f)]);
            const Edge& ed = g.edge(e);
            weight_[static_cast<size_t>(pe)] = g.degree(ed.u) + g.degree(ed.v);
        }
        best_.store(0);
    }

    // Greedy clique grown from the first vertex in order; cheap and tight on
    // the extremal families (their conflict graphs are near-complete).
    std::vector<int> greedy_seed() const {
        std::vector<int> clique;
        if (nv_ == 0) return clique;
        Bits cand(nv_);
        for (int i = 1; i < nv_; ++i) cand.set(i);
        clique.push_back(0);
        Bits live = adj_[0];
        live.and_assign(cand);
        while (true) {
            int v = live.first();
            if (v < 0) break;
            clique.push_back(v);
            live.and_assign(adj_[static_cast<size_t>(v)]);
        }
        return clique;
    }

    void seed_best(const std::vector<int>& clique) {
        best_.store(static_cast<int>(clique.size()));
        best_members_ = clique;
    }

    void run(int threads) {
        if (nv_ == 0) return;
        // Root split: iteration i of the top-level loop owns vertex L[i] and
        // the candidate prefix L[0..i-1]; iterations are independent given
        // the shared best, so omega is schedule-independent.
        Bits all(nv_);
        for (int i = 0; i < nv_; ++i) all.set(i);
        std::vector<int> roots, root_colors;
        color_sort(all, roots, root_colors);

        std::vector<Bits> prefix(roots.size(), Bits(nv_));
        for (size_t i = 1; i < roots.size(); ++i) {
            prefix[i] = prefix[i - 1];
            prefix[i].set(roots[i - 1]);
        }

        std::atomic<int> next_root{static_cast<int>(roots.size()) - 1};
        auto worker = [&] {
            Worker w(*this);
            while (true) {
                int i = next_root.fetch_sub(1);
                if (i < 0) break;
                int v = roots[static_cast<size_t>(i)];
                if (root_colors[static_cast<size_t>(i)] <= best_.load(std::memory_order_relaxed)) {
                    bound_prunes_.fetch_add(1, std::memory_order_relaxed);
                    continue;
                }
                Bits p = prefix[static_cast<size_t>(i)];
                p.and_assign(adj_[static_cast<size_t>(v)]);
                w.path.push_back(v);
                w.expand(p, 1, weight_[static_cast<size_t>(v)]);
                w.path.pop_back();
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    int best() const { return best_.load(); }
    uint64_t nodes() const { return nodes_.load(); }
    uint64_t prunes() const { return bound_prunes_.load(); }

    EdgeSet witness_edges() const {
        EdgeSet out;
        out.reserve(best_members_.size());
        for (int p : best_members_) out.push_back(order_[static_cast<size_t>(p)]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Worker {
        explicit Worker(CliqueSearch& s) : search(s) {}
        CliqueSearch& search;
        std::vector<int> path;

        void expand(const Bits& cand, int depth, int max_weight) {
            search.nodes_.fetch_add(1, std::memory_order_relaxed);
            if (cand.empty()) {
                search.offer(path);
                return;
            }
            // Ore-degree prune: any clique reachable from here lives inside
            // path+cand, so its size is capped by floor(sigma^2/3).
            int sigma = max_weight;
            cand.for_each([&](int v) { sigma = std::max(sigma, search.weight_[static_cast<size_t>(v)]); });
            if (static_cast<long long>(sigma) * sigma / 3 <=
                search.best_.load(std::memory_order_relaxed)) {
                search.bound_prunes_.fetch_add(1, std::memory_order_relaxed);
                return;
            }
            std::vector<int> verts, colors;
            search.color_sort(cand, verts, colors);
            Bits p = cand;
            for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
                if (depth + colors[static_cast<size_t>(i)] <=
                    search.best_.load(std::memory_order_relaxed)) {
                    search.bound_prunes_.fetch_add(1, std::memory_order_relaxed);
                    return;
                }
                int v = verts[static_cast<size_t>(i)];
                p.reset(v);
                Bits next = p;
                next.and_assign(search.adj_[static_cast<size_t>(v)]);
                path.push_back(v);
                expand(next, depth + 1, std::max(max_weight, search.weight_[static_cast<size_t>(v)]));
                path.pop_back();
            }
        }
    };

    // Greedy coloring of cand, emitted class by class so colors ascend;
    // depth + color is the usual clique upper bound for each suffix.
    void color_sort(const Bits& cand, std::vector<int>& verts, std::vector<int>& colors) const {
        verts.clear();
        colors.clear();
        Bits uncolored = cand;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            Bits avail = uncolored;
            while (true) {
                int v = avail.first();
                if (v < 0) break;
                avail.reset(v);
                uncolored.reset(v);
                avail.and_not_assign(adj_[static_cast<size_t>(v)]);
                verts.push_back(v);
                colors.push_back(color);
            }
        }
    }

    void offer(const std::vector<int>& clique) {
        int sz = static_cast<int>(clique.size());
        int cur = best_.load(std::memory_order_relaxed);
        if (sz <= cur) return;
        std::scoped_lock lock(witness_mu_);
        if (sz > best_.load(std::memory_order_relaxed)) {
            best_members_ = clique;
            best_.store(sz);
        }
    }

    int nv_ = 0;
    std::vector<EdgeId> order_;  // position -> edge id
    std::vector<Bits> adj_;
    std::vector<int> weight_;  // position -> d(u)+d(v)

    std::atomic<int> best_{0};
    std::mutex witness_mu_;
    std::vector<int> best_members_;
    std::atomic<uint64_t> nodes_{0};
    std::atomic<uint64_t> bound_prunes_{0};
};

}  // namespace detail

/// Greedy strong clique grown from the highest-conflict-degree edge,
/// extending in conflict-degree order with ties by smallest edge id.
inline EdgeSet greedy_strong_clique(const Graph& g) {
    if (g.m() == 0) return {};
    detail::CliqueSearch search(g, square_of_line_graph(g));
    std::vector<int> seed = search.greedy_seed();
    search.seed_best(seed);
    return search.witness_edges();
}

/// Exact omega(L(G)^2) by branch and bound over the conflict graph.
/// omega is deterministic for any thread count; the witness is the first
/// optimum in search order only in single-threaded mode.
inline SolveResult max_strong_clique(const Graph& g, const SolveOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    res.deterministic_witness = opts.threads <= 1;
    if (g.m() > 0) {
        detail::CliqueSearch search(g, square_of_line_graph(g));
        search.seed_best(search.greedy_seed());
        search.run(std::max(1, opts.threads));
        res.omega = search.best();
        res.witness = search.witness_edges();
        res.nodes_explored = search.nodes();
        res.bound_prunes = search.prunes();
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (verify_strong_clique(g, res.witness))
        throw std::logic_error("max_strong_clique: witness failed verification");
    if (static_cast<int>(res.witness.size()) != res.omega)
        throw std::logic_error("max_strong_clique: witness size mismatch");

    // Proven-bound respect. A violation here is either an implementation bug
    // or a counterexample; both must abort loudly.
    OreReport ore = ore_degree(g, all_edges(g));
    long long sw = ore_degree(g, res.witness).sigma_G_H;
    if (res.omega > sw * sw / 3)
        throw bound_violation("omega exceeds sigma(witness)^2/3");
    long long sg = ore.sigma_G;
    if (res.omega > sg * sg / 3)
        throw bound_violation("omega exceeds sigma(G)^2/3");
    long long dg = ore.delta_G;
    if (res.omega > 4 * dg * dg / 3)
        throw bound_violation("omega exceeds 4*Delta^2/3");
    return res;
}

/// Independent oracle: depth-first enumeration of every clique of the
/// conflict graph, adjacency built pairwise from the predicate, no pruning
/// beyond candidate intersection. Shares no search code with
/// max_strong_clique. Hard-capped at 20 edges.
inline int brute_force_omega(const Graph& g) {
    constexpr int kMaxEdges = 20;
    if (g.m() > kMaxEdges)
        throw input_error("brute_force_omega: " + std::to_string(g.m()) + " edges exceeds cap of " +
                          std::to_string(kMaxEdges));
    int m = g.m();
    std::vector<uint32_t> adj(static_cast<size_t>(m), 0);
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f)
            if (strongly_adjacent(g, e, f)) {
                adj[static_cast<size_t>(e)] |= uint32_t{1} << f;
                adj[static_cast<size_t>(f)] |= uint32_t{1} << e;
            }
    int best = 0;
    auto rec = [&](auto&& self, int count, uint32_t cand) -> void {
        best = std::max(best, count);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, count + 1, cand & adj[static_cast<size_t>(v)]);
        }
    };
    rec(rec, 0, m ? (uint32_t{1} << m) - 1 : 0);
    return best;
}

}  // namespace sgc
