#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kecs/edge_coloring.hpp"
#include "kecs/multigraph.hpp"

namespace kecs {

enum class Method { augmenting, flow, oracle };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& s);

/// Odd alternating path with respect to a subgraph A with Delta(A) <= k:
/// edges at even walk positions lie outside A, odd positions inside A, and
/// both endpoints have A-degree at most k-1. Toggling it grows A by one edge.
struct AugmentingPath {
    int k = 0;
    std::vector<int> walk;  // odd number of edge ids
    int endpoint_u = -1;
    int endpoint_v = -1;
};

struct SolveStats {
    long long augmentations = 0;
    long long flow_value = 0;
    long long nodes_explored = 0;
    bool budget_exhausted = false;
    bool shortcut = false;  // k = 0 or k >= Delta(G)
};

struct SolveResult {
    int k = 0;
    long long nu = 0;
    EdgeSubgraph subgraph;
    EdgeColoring coloring;
    Method method = Method::flow;
    SolveStats stats;

    bool exact() const { return !stats.budget_exhausted; }
};

/// Maximal (not maximum) subgraph with Delta <= k: scan edges by ascending id,
/// keep an edge iff both endpoint degrees are still below k.
EdgeSubgraph greedy_initial(const MultiGraph& g, int k);

/// Search for an augmenting path for A. On bipartite graphs this runs a BFS in
/// the residual network of the flow encoding, so NotFound proves |A| = nu_k(G).
/// On non-bipartite graphs it falls back to an exhaustive simple-path search
/// (exponential; intended for small demonstration instances), and NotFound
/// carries no maximality guarantee in the other direction: a maximum subgraph
/// may still admit a path there.
std::optional<AugmentingPath> find_augmenting_path(const MultiGraph& g,
                                                   const EdgeSubgraph& a, int k);

/// Validates p against a (alternation, simplicity, endpoint degrees) and
/// returns a with the even edges removed and odd edges added.
EdgeSubgraph augment(const EdgeSubgraph& a, const AugmentingPath& p);

/// Repeated augmentation from a greedy warm start. Bipartite only.
SolveResult solve_augmenting(const MultiGraph& g, int k);

/// Degree-constrained subgraph via integral max flow:
/// source -> U-vertex with capacity min(k, deg), one unit arc per edge,
/// W-vertex -> sink with capacity min(k, deg). Bipartite only.
SolveResult solve_flow(const MultiGraph& g, int k);

struct OracleOptions {
    long long node_budget = 200'000'000;
    /// Optional externally proven cap on nu_k (e.g. an apex-deletion bound).
    /// The core search never derives such bounds itself.
    std::optional<long long> upper_bound;
    /// Optional verified warm start; validated before use.
    const SolveResult* seed = nullptr;
};

/// Exact nu_k for arbitrary loopless multigraphs by branch and bound over
/// per-edge color-or-skip decisions. Edges are tried in descending
/// degree-sum order; color classes are introduced in canonical order.
/// When the node budget runs out the best found so far is returned with
/// stats.budget_exhausted set and no optimality claim.
SolveResult nu_oracle(const MultiGraph& g, int k, const OracleOptions& opt = {});

}  // namespace kecs
