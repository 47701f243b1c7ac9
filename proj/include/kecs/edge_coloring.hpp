#pragma once

#include <string>
#include <vector>

#include "kecs/multigraph.hpp"

namespace kecs {

struct DegreeExceedsKError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StalePathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partial proper edge coloring with colors 1..k (0 = uncolored).
/// Keeps edge->color, color->class and vertex x color incidence in sync, so
/// Kempe walks are O(length) and properness is enforced on every mutation.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(const MultiGraph& host, int k);

    const MultiGraph& host() const { return *host_; }
    int color_count() const { return k_; }
    int color_of(int e) const { return assign_[e]; }
    bool is_colored(int e) const { return assign_[e] != 0; }
    int colored_count() const { return colored_; }

    /// Edge of color c at v, or -1 when v misses c.
    int incident_edge(int v, int c) const { return incident_[v][c - 1]; }
    bool misses(int v, int c) const { return incident_edge(v, c) == -1; }

    void set_color(int e, int c);
    void unset_color(int e);

    /// Lowest color missing at v, or 0 when v is incident to all k colors.
    int lowest_free_color(int v) const;
    int lowest_common_free_color(int u, int v) const;

    /// The class E_c as a sorted edge id list (a matching by construction).
    std::vector<int> color_class(int c) const;

private:
    const MultiGraph* host_ = nullptr;
    int k_ = 0;
    int colored_ = 0;
    std::vector<int> assign_;
    std::vector<std::vector<int>> incident_;  // [v][c-1] -> edge id or -1
};

/// Maximal alternating walk in E_alpha union E_beta: a path or an even cycle.
struct KempePath {
    int alpha = 0;
    int beta = 0;
    std::vector<int> walk;         // edge ids, consecutive edges share a vertex
    std::vector<int> walk_colors;  // colors at creation time, for staleness checks
    int endpoint_u = -1;
    int endpoint_v = -1;
    bool is_cycle = false;

    bool empty() const { return walk.empty(); }
};

/// Proper k-coloring of a subgraph of a bipartite host with Delta(H) <= k.
/// Inserts edges in ascending id order; when no color is free at both ends,
/// flips the Kempe chain anchored at the second endpoint (it cannot reach the
/// first in a bipartite graph) and colors with the first endpoint's free color.
EdgeColoring konig_color(const EdgeSubgraph& h, int k);

/// Maximal alpha-beta walk containing v. Empty walk when v misses both colors.
KempePath kempe_path(const EdgeColoring& c, int v, int alpha, int beta);

/// Exchange alpha and beta on p's edges. Throws StalePathError when p no
/// longer matches c. Swapping twice (path recomputed) restores the coloring.
EdgeColoring kempe_swap(const EdgeColoring& c, const KempePath& p);

struct ColoringViolation {
    int vertex = -1;
    int color = 0;
    std::string kind;  // "conflict", "uncolored-member", "colored-nonmember", "color-range"
    std::vector<int> edges;
};

struct ColoringReport {
    bool ok = true;
    std::vector<ColoringViolation> violations;
};

/// True iff c is total on h, uses colors within 1..k and no two adjacent
/// edges share a color. Violations are reported as (vertex, color) pairs.
ColoringReport verify_coloring(const EdgeSubgraph& h, const EdgeColoring& c, int k);

}  // namespace kecs
