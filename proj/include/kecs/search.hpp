#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kecs/spectrum.hpp"

namespace kecs {

enum class GraphClass { bipartite, nearly_bipartite, all };

std::optional<GraphClass> graph_class_from_name(const std::string& s);
std::string graph_class_name(GraphClass c);

enum class RuleId {
    concavity,
    midpoint,
    theorem7,  // midpoint restricted to i = 1
    conj1,
    conj2,
    conj2floor,
    cubic,
    lemma5,
    props34,
};

std::optional<RuleId> rule_from_name(const std::string& s);
std::string rule_name(RuleId r);
bool rule_is_conjecture(RuleId r);

/// Evaluate one rule against one graph. Returns every violating (k, i)
/// combination as its own report plus nothing when the rule holds; the total
/// number of comparisons made is accumulated into `checks`. Rules whose
/// precondition the graph fails (not cubic, b > 1) contribute no checks.
std::vector<CheckReport> evaluate_rule(RuleId rule, const MultiGraph& g,
                                       const NuSpectrum& s, std::optional<int> b,
                                       long long& checks, const SpectrumOptions& opt);

struct SearchOptions {
    GraphClass cls = GraphClass::bipartite;
    int max_n = 6;
    int max_multiplicity = 1;
    std::vector<RuleId> rules;
    int jobs = 1;
    long long samples = 0;  // 0 = exhaustive adjacency-mask enumeration
    unsigned long long seed = 0;
    long long node_budget = 200'000'000;
};

struct SearchSummary {
    long long graphs = 0;
    long long checks = 0;
    long long violations = 0;       // binding violations of proved statements
    long long counterexamples = 0;  // violations of conjecture rules
    long long informational = 0;
};

/// Enumerates (or samples) graphs of the class and streams violation reports
/// in deterministic enumeration order, independent of the worker count.
SearchSummary search_counterexamples(const SearchOptions& opt,
                                     const std::function<void(const CheckReport&)>& emit);

/// All simple graphs on exactly n labelled vertices, by adjacency bitmask.
/// No isomorphism dedup. Deterministic order.
void for_each_simple_graph(int n, const std::function<void(const MultiGraph&)>& f);

/// Deterministic parallel sweep over a range [0, total): chunks are handed to
/// workers, per-chunk outputs are merged back in chunk order.
void parallel_chunks(long long total, int jobs,
                     const std::function<std::vector<CheckReport>(long long, long long)>& work,
                     const std::function<void(const CheckReport&)>& emit);

}  // namespace kecs
