#include "kecs/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "kecs/genio.hpp"

namespace kecs {

std::optional<GraphClass> graph_class_from_name(const std::string& s) {
    if (s == "bipartite") return GraphClass::bipartite;
    if (s == "nearly-bipartite" || s == "nearly_bipartite") return GraphClass::nearly_bipartite;
    if (s == "all") return GraphClass::all;
    return std::nullopt;
}

std::string graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::bipartite: return "bipartite";
        case GraphClass::nearly_bipartite: return "nearly-bipartite";
        case GraphClass::all: return "all";
    }
    return "?";
}

std::optional<RuleId> rule_from_name(const std::string& s) {
    if (s == "concavity") return RuleId::concavity;
    if (s == "midpoint") return RuleId::midpoint;
    if (s == "theorem7") return RuleId::theorem7;
    if (s == "conj1") return RuleId::conj1;
    if (s == "conj2") return RuleId::conj2;
    if (s == "conj2floor") return RuleId::conj2floor;
    if (s == "cubic") return RuleId::cubic;
    if (s == "lemma5") return RuleId::lemma5;
    if (s == "props34") return RuleId::props34;
    return std::nullopt;
}

std::string rule_name(RuleId r) {
    switch (r) {
        case RuleId::concavity: return "concavity";
        case RuleId::midpoint: return "midpoint";
        case RuleId::theorem7: return "theorem7";
        case RuleId::conj1: return "conj1";
        case RuleId::conj2: return "conj2";
        case RuleId::conj2floor: return "conj2floor";
        case RuleId::cubic: return "cubic";
        case RuleId::lemma5: return "lemma5";
        case RuleId::props34: return "props34";
    }
    return "?";
}

bool rule_is_conjecture(RuleId r) {
    return r == RuleId::conj1 || r == RuleId::conj2 || r == RuleId::conj2floor;
}

namespace {

void attach_witness(CheckReport& rep, const MultiGraph& g) {
    rep.witness_edges.clear();
    rep.witness_edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) rep.witness_edges.emplace_back(e.u, e.v);
}

}  // namespace

std::vector<CheckReport> evaluate_rule(RuleId rule, const MultiGraph& g, const NuSpectrum& s,
                                       std::optional<int> b, long long& checks,
                                       const SpectrumOptions& opt) {
    std::vector<CheckReport> out;
    const bool bip = b.has_value() ? *b == 0 : bipartition(g).is_bipartite();
    auto keep = [&](CheckReport rep) {
        checks += rep.checks;
        if (rep.violated()) {
            attach_witness(rep, g);
            if (rep.witness_spectrum.empty()) rep.witness_spectrum = s.values;
            out.push_back(std::move(rep));
        }
    };

    switch (rule) {
        case RuleId::concavity:
            keep(check_concavity(s, bip));
            break;
        case RuleId::midpoint:
        case RuleId::theorem7:
            for (int k = 1; k <= s.cap(); ++k) {
                int imax = rule == RuleId::theorem7 ? 1 : k;
                for (int i = 1; i <= std::min(imax, k); ++i) {
                    CheckReport rep = check_midpoint(s, k, i, bip);
                    rep.rule = rule_name(rule);
                    keep(std::move(rep));
                }
            }
            break;
        case RuleId::conj1:
            if (odd_cycle_transversal_number(g, 1).has_value())
                keep(check_nearly_bipartite(g, s));
            break;
        case RuleId::conj2:
        case RuleId::conj2floor: {
            int bval = b ? *b : *odd_cycle_transversal_number(g);
            keep(check_b_conjecture(g, s, bval, rule == RuleId::conj2floor));
            break;
        }
        case RuleId::cubic: {
            bool cubic = g.vertex_count() > 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) != 3) cubic = false;
            if (cubic) keep(check_cubic_bound(g, s));
            break;
        }
        case RuleId::lemma5:
            if (bip) {
                for (int k = 0; k <= g.max_degree(); ++k)
                    keep(check_lemma5(g, solve_flow(g, k)));
            }
            break;
        case RuleId::props34:
            keep(check_deletion_bounds(g, opt));
            break;
    }
    return out;
}

void for_each_simple_graph(int n, const std::function<void(const MultiGraph&)>& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const long long total = 1ll << pairs.size();
    std::vector<std::pair<int, int>> edges;
    for (long long mask = 0; mask < total; ++mask) {
        edges.clear();
        for (size_t t = 0; t < pairs.size(); ++t)
            if (mask >> t & 1) edges.push_back(pairs[t]);
        f(MultiGraph(n, edges));
    }
}

void parallel_chunks(long long total, int jobs,
                     const std::function<std::vector<CheckReport>(long long, long long)>& work,
                     const std::function<void(const CheckReport&)>& emit) {
    if (total <= 0) return;
    jobs = std::max(1, jobs);
    const long long chunk = std::max<long long>(1, std::min<long long>(65536, total / (jobs * 8) + 1));
    const long long nchunks = (total + chunk - 1) / chunk;

    if (jobs == 1) {
        for (long long c = 0; c < nchunks; ++c) {
            auto reports = work(c * chunk, std::min(total, (c + 1) * chunk));
            for (const auto& r : reports) emit(r);
        }
        return;
    }

    std::vector<std::vector<CheckReport>> results(nchunks);
    std::atomic<long long> next{0};
    auto worker = [&]() {
        while (true) {
            long long c = next.fetch_add(1);
            if (c >= nchunks) break;
            results[c] = work(c * chunk, std::min(total, (c + 1) * chunk));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& bucket : results)
        for (const auto& r : bucket) emit(r);
}

namespace {

// general Erdos-Renyi multigraph for sampled class=all sweeps
MultiGraph gen_random_general(int n, double p, int max_mult, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int t = 0; t < max_mult; ++t)
                if (rng.uniform01() < p) edges.emplace_back(i, j);
    return MultiGraph(n, edges);
}

struct SweepCounters {
    std::atomic<long long> graphs{0};
    std::atomic<long long> checks{0};
    std::atomic<long long> violations{0};
    std::atomic<long long> counterexamples{0};
    std::atomic<long long> informational{0};
};

bool needs_full_b(const std::vector<RuleId>& rules) {
    for (RuleId r : rules)
        if (r == RuleId::conj2 || r == RuleId::conj2floor) return true;
    return false;
}

std::vector<CheckReport> evaluate_graph(const MultiGraph& g, const SearchOptions& opt,
                                        SweepCounters& counters,
                                        std::optional<unsigned long long> seed) {
    // class membership
    std::optional<int> b;
    if (opt.cls == GraphClass::bipartite) {
        if (!bipartition(g).is_bipartite()) return {};
        b = 0;
    } else if (opt.cls == GraphClass::nearly_bipartite) {
        auto b1 = odd_cycle_transversal_number(g, 1);
        if (!b1) return {};
        b = b1;
    }
    if (needs_full_b(opt.rules) && !b) b = odd_cycle_transversal_number(g);
    counters.graphs.fetch_add(1, std::memory_order_relaxed);

    SpectrumOptions sopt;
    sopt.node_budget = opt.node_budget;
    // structural shortcuts stay off while the sweep is checking the very
    // statements they rest on
    sopt.structural_hints = true;
    for (RuleId r : opt.rules)
        if (r == RuleId::props34 || r == RuleId::lemma5) sopt.structural_hints = false;

    bool needs_spectrum = false;
    for (RuleId r : opt.rules)
        if (r != RuleId::lemma5) needs_spectrum = true;
    NuSpectrum s;
    if (needs_spectrum) s = spectrum_auto(g, sopt);

    std::vector<CheckReport> out;
    for (RuleId rule : opt.rules) {
        long long checks = 0;
        auto reports = evaluate_rule(rule, g, s, b, checks, sopt);
        counters.checks.fetch_add(checks, std::memory_order_relaxed);
        for (auto& rep : reports) {
            rep.seed = seed;
            if (rep.informational)
                counters.informational.fetch_add(1, std::memory_order_relaxed);
            else if (rule_is_conjecture(rule))
                counters.counterexamples.fetch_add(1, std::memory_order_relaxed);
            else
                counters.violations.fetch_add(1, std::memory_order_relaxed);
            out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace

SearchSummary search_counterexamples(const SearchOptions& opt,
                                     const std::function<void(const CheckReport&)>& emit) {
    SweepCounters counters;

    if (opt.samples > 0) {
        auto work = [&](long long lo, long long hi) {
            std::vector<CheckReport> out;
            for (long long idx = lo; idx < hi; ++idx) {
                // one derived-seed generator per sample keeps draws independent
                unsigned long long s = opt.seed * 0x9e3779b97f4a7c15ull + (idx + 1);
                Rng rng(s);
                int max_side = std::max(1, opt.max_n / 2);
                MultiGraph g = [&]() -> MultiGraph {
                    switch (opt.cls) {
                        case GraphClass::bipartite: {
                            int a = 1 + static_cast<int>(rng.below(max_side));
                            int c = 1 + static_cast<int>(rng.below(max_side));
                            double p = 0.2 + 0.6 * rng.uniform01();
                            return gen_random_bipartite(a, c, p, opt.max_multiplicity, rng.next());
                        }
                        case GraphClass::nearly_bipartite: {
                            int a = 1 + static_cast<int>(rng.below(max_side));
                            int c = 1 + static_cast<int>(rng.below(max_side));
                            double p = 0.2 + 0.6 * rng.uniform01();
                            int apex = static_cast<int>(rng.below(a + c + 1));
                            return gen_nearly_bipartite(a, c, p, opt.max_multiplicity, apex,
                                                        rng.next());
                        }
                        case GraphClass::all: {
                            int nn = 1 + static_cast<int>(rng.below(opt.max_n));
                            double p = 0.2 + 0.6 * rng.uniform01();
                            return gen_random_general(nn, p, opt.max_multiplicity, rng);
                        }
                    }
                    return MultiGraph(0, {});
                }();
                auto reports = evaluate_graph(g, opt, counters, s);
                out.insert(out.end(), reports.begin(), reports.end());
            }
            return out;
        };
        parallel_chunks(opt.samples, opt.jobs, work, emit);
    } else {
        for (int n = 1; n <= opt.max_n; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
            const long long total = 1ll << pairs.size();
            auto work = [&](long long lo, long long hi) {
                std::vector<CheckReport> out;
                std::vector<std::pair<int, int>> edges;
                for (long long mask = lo; mask < hi; ++mask) {
                    edges.clear();
                    for (size_t t = 0; t < pairs.size(); ++t)
                        if (mask >> t & 1) edges.push_back(pairs[t]);
                    MultiGraph g(n, edges);
                    auto reports = evaluate_graph(g, opt, counters, std::nullopt);
                    out.insert(out.end(), reports.begin(), reports.end());
                }
                return out;
            };
            parallel_chunks(total, opt.jobs, work, emit);
        }
    }

    SearchSummary sum;
    sum.graphs = counters.graphs.load();
    sum.checks = counters.checks.load();
    sum.violations = counters.violations.load();
    sum.counterexamples = counters.counterexamples.load();
    sum.informational = counters.informational.load();
    return sum;
}

}  // namespace kecs
