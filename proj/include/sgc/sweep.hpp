#pragma once

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sgc/bounds.hpp"
#include "sgc/generators.hpp"
#include "sgc/graph.hpp"
#include "sgc/io.hpp"
#include "sgc/solver.hpp"

namespace sgc {

/// One (instance, bound) evaluation. Self-contained: re-checkable from the
/// row alone, without the graph.
struct SweepRecord {
    std::string family;
    std::string params;  // ';'-separated key=value, never contains a comma
    int n = 0;
    int m = 0;
    int delta = 0;
    int sigma = 0;
    int omega = 0;
    std::string bound_name;
    double bound_value = 0;
    double slack = 0;  // bound_value - omega
    bool pass = false; // omega <= floor(bound_value)

    bool operator==(const SweepRecord&) const = default;
};

inline const char* sweep_csv_header() {
    return "family,params,n,m,delta,sigma,omega,bound_name,bound_value,slack,pass";
}

inline std::string format_csv(const SweepRecord& r) {
    char num[64];
    std::string out = r.family + ',' + r.params;
    out += ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.delta) +
           ',' + std::to_string(r.sigma) + ',' + std::to_string(r.omega) + ',' + r.bound_name;
    std::snprintf(num, sizeof num, ",%.17g", r.bound_value);
    out += num;
    std::snprintf(num, sizeof num, ",%.17g", r.slack);
    out += num;
    out += r.pass ? ",1" : ",0";
    return out;
}

inline SweepRecord parse_csv(const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            f.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    f.push_back(cur);
    if (f.size() != 11) throw input_error("sweep CSV row has " + std::to_string(f.size()) +
                                          " fields, expected 11: " + line);
    SweepRecord r;
    try {
        r.family = f[0];
        r.params = f[1];
        r.n = std::stoi(f[2]);
        r.m = std::stoi(f[3]);
        r.delta = std::stoi(f[4]);
        r.sigma = std::stoi(f[5]);
        r.omega = std::stoi(f[6]);
        r.bound_name = f[7];
        r.bound_value = std::stod(f[8]);
        r.slack = std::stod(f[9]);
        r.pass = f[10] == "1";
    } catch (const std::exception&) {
        throw input_error("sweep CSV row is malformed: " + line);
    }
    return r;
}

/// Catalog entry lookup by field name; bip_* entries only make sense on
/// bipartite hosts and are skipped elsewhere.
inline double catalog_value(const BoundCatalog& c, const std::string& name) {
    if (name == "trivial_2d2") return c.trivial_2d2;
    if (name == "nowak_15d2") return c.nowak_15d2;
    if (name == "conj_125d2") return c.conj_125d2;
    if (name == "general_sigma2_3") return c.general_sigma2_3;
    if (name == "general_43d2") return c.general_43d2;
    if (name == "bip_sigma2_4") return c.bip_sigma2_4;
    if (name == "bip_exact") return c.bip_exact;
    if (name == "reduction_a") return c.reduction_a;
    throw input_error("unknown bound name '" + name + "'");
}

inline bool bound_needs_bipartite(const std::string& name) {
    return name == "bip_sigma2_4" || name == "bip_exact";
}

struct SweepOptions {
    bool exhaustive = false;
    int exhaustive_n = 0;
    GeneratorSpec random_spec;  // seed field is the base seed; instance i uses seed+i
    int count = 0;
    std::vector<std::string> checks{"general_sigma2_3", "general_43d2", "conj_125d2"};
    double a = 1.0 / 3.0;
    int threads = 1;
    int solver_threads = 1;
};

struct SweepSummary {
    uint64_t instances = 0;
    uint64_t violations = 0;
    std::map<std::string, double> min_slack;              // per bound
    std::map<std::string, uint64_t> tight_counts;         // slack == 0 instances per bound
    std::map<std::string, std::vector<std::string>> tight;  // capped descriptor lists
    std::vector<std::string> violating_graphs;            // serialized, capped
};

namespace detail {
constexpr size_t kTightCap = 16;
constexpr double kTightEps = 1e-9;
}  // namespace detail

/// Runs the sweep and streams every record, in instance order, to `emit`.
/// Instances are solved by a worker pool when threads > 1; the collector
/// stays single-threaded so the output order is deterministic.
template <typename Emit>
SweepSummary run_sweep(const SweepOptions& opts, Emit&& emit) {
    for (const std::string& name : opts.checks) catalog_value(BoundCatalog{}, name);
    check_reduction_a(opts.a);

    uint64_t total;
    std::string family;
    if (opts.exhaustive) {
        AllGraphsStream probe(opts.exhaustive_n);
        total = probe.count();
        family = "exhaustive";
    } else {
        if (opts.count < 0) throw input_error("sweep: negative instance count");
        total = static_cast<uint64_t>(opts.count);
        family = opts.random_spec.family;
    }

    auto instance = [&](uint64_t i) -> std::pair<Graph, std::string> {
        if (opts.exhaustive) {
            AllGraphsStream s(opts.exhaustive_n);
            std::string params = "n=" + std::to_string(opts.exhaustive_n) + ";mask=" + std::to_string(i);
            return {s.at(i), params};
        }
        GeneratorSpec spec = opts.random_spec;
        spec.seed += i;
        std::string params;
        for (size_t k = 0; k < spec.params.size(); ++k) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "p%zu=%.17g;", k, spec.params[k]);
            params += buf;
        }
        params += "seed=" + std::to_string(spec.seed);
        return {make_graph(spec), params};
    };

    struct InstanceOut {
        std::vector<SweepRecord> records;
        std::string serialized;  // nonempty only on violation
    };
    std::vector<InstanceOut> results(static_cast<size_t>(total));

    auto solve_one = [&](uint64_t i) {
        auto [g, params] = instance(i);
        SolveOptions sopts;
        sopts.threads = opts.solver_threads;
        SolveResult sol = max_strong_clique(g, sopts);
        OreReport ore = ore_degree(g, all_edges(g));
        BoundCatalog cat = bound_catalog(ore, opts.a);
        bool bip = bipartition_of(g).has_value();

        InstanceOut& out = results[static_cast<size_t>(i)];
        bool violated = false;
        for (const std::string& name : opts.checks) {
            if (bound_needs_bipartite(name) && !bip) continue;
            SweepRecord rec;
            rec.family = family;
            rec.params = params;
            rec.n = g.n();
            rec.m = g.m();
            rec.delta = ore.delta_G;
            rec.sigma = ore.sigma_G;
            rec.omega = sol.omega;
            rec.bound_name = name;
            rec.bound_value = catalog_value(cat, name);
            rec.slack = rec.bound_value - sol.omega;
            rec.pass = fits_bound(sol.omega, rec.bound_value);
            if (!rec.pass) violated = true;
            out.records.push_back(std::move(rec));
        }
        if (violated) out.serialized = to_string(g);
    };

    if (opts.threads <= 1) {
        for (uint64_t i = 0; i < total; ++i) solve_one(i);
    } else {
        std::atomic<uint64_t> next{0};
        auto worker = [&] {
            while (true) {
                uint64_t i = next.fetch_add(1);
                if (i >= total) break;
                solve_one(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepSummary sum;
    sum.instances = total;
    for (uint64_t i = 0; i < total; ++i) {
        const InstanceOut& out = results[static_cast<size_t>(i)];
        for (const SweepRecord& rec : out.records) {
            emit(rec);
            auto it = sum.min_slack.find(rec.bound_name);
            if (it == sum.min_slack.end() || rec.slack < it->second)
                sum.min_slack[rec.bound_name] = rec.slack;
            if (!rec.pass) ++sum.violations;
            if (rec.slack <= detail::kTightEps) {
                ++sum.tight_counts[rec.bound_name];
                auto& list = sum.tight[rec.bound_name];
                if (list.size() < detail::kTightCap) list.push_back(rec.params);
            }
        }
        if (!out.serialized.empty() && sum.violating_graphs.size() < detail::kTightCap)
            sum.violating_graphs.push_back(out.serialized);
    }
    return sum;
}

}  // namespace sgc
