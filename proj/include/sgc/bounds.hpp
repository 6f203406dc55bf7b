#pragma once

#include <cmath>
#include <string>

#include "sgc/graph.hpp"

namespace sgc {

/// Ore-degree data for an edge set H inside its host G:
///   sigma_G_H = max over uv in H of d_G(u)+d_G(v), 0 for empty H;
///   sigma_G   = the same over all edges of G;
///   delta_H   = max degree counting only H edges.
struct OreReport {
    int delta_G = 0;
    int delta_H = 0;
    int sigma_G = 0;
    int sigma_G_H = 0;
};

inline OreReport ore_degree(const Graph& g, const EdgeSet& h) {
    OreReport r;
    r.delta_G = g.max_degree();
    for (const Edge& e : g.edges())
        r.sigma_G = std::max(r.sigma_G, g.degree(e.u) + g.degree(e.v));
    std::vector<int> dh(static_cast<size_t>(g.n()), 0);
    for (EdgeId e : h) {
        g.check_edge(e);
        const Edge& ed = g.edge(e);
        r.sigma_G_H = std::max(r.sigma_G_H, g.degree(ed.u) + g.degree(ed.v));
        ++dh[static_cast<size_t>(ed.u)];
        ++dh[static_cast<size_t>(ed.v)];
    }
    for (int d : dh) r.delta_H = std::max(r.delta_H, d);
    return r;
}

inline EdgeSet all_edges(const Graph& g) {
    EdgeSet h(static_cast<size_t>(g.m()));
    for (EdgeId e = 0; e < g.m(); ++e) h[static_cast<size_t>(e)] = e;
    return h;
}

/// Every clique-size bound in one place. Delta-based entries use delta_G,
/// sigma-based entries use sigma_G_H, so with H = E(G) this is the bound
/// table for omega(L(G)^2) itself.
struct BoundCatalog {
    double trivial_2d2 = 0;       // 2 * Delta^2
    double nowak_15d2 = 0;        // 1.5 * Delta^2
    double conj_125d2 = 0;        // 1.25 * Delta^2 (conjectured, reference value)
    double general_sigma2_3 = 0;  // sigma^2 / 3
    double general_43d2 = 0;      // (4/3) * Delta^2
    double bip_sigma2_4 = 0;      // sigma^2 / 4 (bipartite hosts)
    double bip_exact = 0;         // Delta_H * (sigma - Delta_H) (bipartite hosts)
    double reduction_a = 0;       // (1+a)/4 * sigma^2
};

inline void check_reduction_a(double a) {
    if (!(a >= 0.25 && a <= 1.0 / 3.0))
        throw input_error("a = " + std::to_string(a) + " outside [1/4, 1/3]");
}

inline BoundCatalog bound_catalog(const OreReport& r, double a) {
    check_reduction_a(a);
    BoundCatalog c;
    double d2 = static_cast<double>(r.delta_G) * r.delta_G;
    double s2 = static_cast<double>(r.sigma_G_H) * r.sigma_G_H;
    c.trivial_2d2 = 2.0 * d2;
    c.nowak_15d2 = 1.5 * d2;
    c.conj_125d2 = 1.25 * d2;
    c.general_sigma2_3 = s2 / 3.0;
    c.general_43d2 = 4.0 * d2 / 3.0;
    c.bip_sigma2_4 = s2 / 4.0;
    c.bip_exact = static_cast<double>(r.delta_H) * (r.sigma_G_H - r.delta_H);
    c.reduction_a = (1.0 + a) / 4.0 * s2;
    return c;
}

/// Integer-aware comparison against a real bound: a clique size is an
/// integer, so count <= B iff count <= floor(B). The epsilon absorbs
/// representation noise in bounds that are exact integers.
inline bool fits_bound(long long count, double bound) {
    return static_cast<double>(count) <= std::floor(bound + 1e-9);
}

inline double s_of(double a) {
    if (a < -1.0) throw input_error("s_of: a < -1");
    return std::sqrt(1.0 + a) - 1.0;
}

/// The convex envelope behind claim 2:
///   f(t) = ((1+4a-4a^2) sigma^2 + (2-12a+8a^2) t sigma + (1+4a-4a^2) t^2) / (8(1-a)).
inline double f_poly(double a, double sigma, double t) {
    if (a == 1.0) throw input_error("f_poly: singular at a = 1");
    double c0 = 1.0 + 4.0 * a - 4.0 * a * a;
    double c1 = 2.0 - 12.0 * a + 8.0 * a * a;
    return (c0 * sigma * sigma + c1 * t * sigma + c0 * t * t) / (8.0 * (1.0 - a));
}

/// The concave companion: g(t) = (((1-2a) sigma + dy)/(1-a) - t) * t.
inline double g_poly(double a, double sigma, double dy, double t) {
    if (a == 1.0) throw input_error("g_poly: singular at a = 1");
    return (((1.0 - 2.0 * a) * sigma + dy) / (1.0 - a) - t) * t;
}

struct ClaimsReport {
    bool claim1_ok = false;
    double claim1_slack = 0;  // (1+a)/4 sigma^2 - f(s sigma)
    bool claim2_ok = false;
    double claim2_slack = 0;  // (1+a)/4 sigma^2 - f(sigma/(3-2a))
};

/// Evaluates both claim inequalities at their extremal arguments. Slacks are
/// accumulated in extended precision: they are small differences of terms of
/// order sigma^2 and plain doubles lose too much to cancellation at
/// sigma = 100.
inline ClaimsReport verify_claims(double a, double sigma) {
    check_reduction_a(a);
    if (!(sigma > 0)) throw input_error("verify_claims: sigma must be positive");
    auto f_ext = [](long double aa, long double ss, long double t) {
        long double c0 = 1.0L + 4.0L * aa - 4.0L * aa * aa;
        long double c1 = 2.0L - 12.0L * aa + 8.0L * aa * aa;
        return (c0 * ss * ss + c1 * t * ss + c0 * t * t) / (8.0L * (1.0L - aa));
    };
    long double aa = a, ss = sigma;
    long double cap = (1.0L + aa) / 4.0L * ss * ss;
    long double s = std::sqrt(1.0L + aa) - 1.0L;
    ClaimsReport rep;
    rep.claim1_slack = static_cast<double>(cap - f_ext(aa, ss, s * ss));
    rep.claim1_ok = rep.claim1_slack >= 0;
    rep.claim2_slack = static_cast<double>(cap - f_ext(aa, ss, ss / (3.0L - 2.0L * aa)));
    rep.claim2_ok = rep.claim2_slack >= 0;
    return rep;
}

}  // namespace sgc
