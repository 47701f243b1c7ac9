#include "kecs/edge_coloring.hpp"

#include <algorithm>

namespace kecs {

EdgeColoring::EdgeColoring(const MultiGraph& host, int k)
    : host_(&host), k_(k), assign_(host.edge_count(), 0) {
    if (k < 0) throw GraphError("color count must be non-negative");
    incident_.assign(host.vertex_count(), std::vector<int>(k_, -1));
}

void EdgeColoring::set_color(int e, int c) {
    if (c < 1 || c > k_) throw GraphError("color out of range");
    if (assign_[e] != 0) throw GraphError("edge already colored");
    const Edge& ed = host_->edge(e);
    if (incident_[ed.u][c - 1] != -1 || incident_[ed.v][c - 1] != -1)
        throw GraphError("color already present at an endpoint");
    assign_[e] = c;
    incident_[ed.u][c - 1] = e;
    incident_[ed.v][c - 1] = e;
    ++colored_;
}

void EdgeColoring::unset_color(int e) {
    int c = assign_[e];
    if (c == 0) return;
    const Edge& ed = host_->edge(e);
    assign_[e] = 0;
    incident_[ed.u][c - 1] = -1;
    incident_[ed.v][c - 1] = -1;
    --colored_;
}

int EdgeColoring::lowest_free_color(int v) const {
    for (int c = 1; c <= k_; ++c)
        if (incident_[v][c - 1] == -1) return c;
    return 0;
}

int EdgeColoring::lowest_common_free_color(int u, int v) const {
    for (int c = 1; c <= k_; ++c)
        if (incident_[u][c - 1] == -1 && incident_[v][c - 1] == -1) return c;
    return 0;
}

std::vector<int> EdgeColoring::color_class(int c) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(assign_.size()); ++e)
        if (assign_[e] == c) out.push_back(e);
    return out;
}

namespace {

// Walk from v along the chain that starts with color `first`. Each vertex has
// at most one incident edge per color, so the walk is forced; it stops at a
// vertex missing the next color, or back at v (even cycle).
struct WalkResult {
    std::vector<int> edges;
    std::vector<int> colors;
    int far = -1;
    bool cycle = false;
};

WalkResult chain_walk(const EdgeColoring& c, int v, int first, int second) {
    WalkResult w;
    int cur = v;
    int col = first;
    while (true) {
        int e = c.incident_edge(cur, col);
        if (e == -1) break;
        w.edges.push_back(e);
        w.colors.push_back(col);
        const Edge& ed = c.host().edge(e);
        cur = ed.u == cur ? ed.v : ed.u;
        col = col == first ? second : first;
        if (cur == v) {
            w.cycle = true;
            break;
        }
    }
    w.far = cur;
    return w;
}

void swap_in_place(EdgeColoring& c, const KempePath& p) {
    for (size_t i = 0; i < p.walk.size(); ++i) {
        if (c.color_of(p.walk[i]) != p.walk_colors[i])
            throw StalePathError("kempe_swap: path no longer matches the coloring");
    }
    for (int e : p.walk) c.unset_color(e);
    for (size_t i = 0; i < p.walk.size(); ++i) {
        int old = p.walk_colors[i];
        c.set_color(p.walk[i], old == p.alpha ? p.beta : p.alpha);
    }
}

}  // namespace

KempePath kempe_path(const EdgeColoring& c, int v, int alpha, int beta) {
    if (alpha == beta) throw GraphError("kempe_path: colors must differ");
    if (alpha < 1 || alpha > c.color_count() || beta < 1 || beta > c.color_count())
        throw GraphError("kempe_path: color out of range");
    if (v < 0 || v >= c.host().vertex_count()) throw GraphError("kempe_path: vertex out of range");

    KempePath p;
    p.alpha = alpha;
    p.beta = beta;
    bool has_a = !c.misses(v, alpha);
    bool has_b = !c.misses(v, beta);
    if (!has_a && !has_b) {
        p.endpoint_u = p.endpoint_v = v;
        return p;  // empty path at v
    }
    if (has_a) {
        WalkResult fwd = chain_walk(c, v, alpha, beta);
        if (fwd.cycle) {
            p.walk = fwd.edges;
            p.walk_colors = fwd.colors;
            p.endpoint_u = p.endpoint_v = v;
            p.is_cycle = true;
            return p;
        }
        if (has_b) {
            WalkResult back = chain_walk(c, v, beta, alpha);
            std::reverse(back.edges.begin(), back.edges.end());
            std::reverse(back.colors.begin(), back.colors.end());
            p.walk = back.edges;
            p.walk_colors = back.colors;
            p.walk.insert(p.walk.end(), fwd.edges.begin(), fwd.edges.end());
            p.walk_colors.insert(p.walk_colors.end(), fwd.colors.begin(), fwd.colors.end());
            p.endpoint_u = back.far;
            p.endpoint_v = fwd.far;
            return p;
        }
        p.walk = fwd.edges;
        p.walk_colors = fwd.colors;
        p.endpoint_u = v;
        p.endpoint_v = fwd.far;
        return p;
    }
    WalkResult fwd = chain_walk(c, v, beta, alpha);
    p.walk = fwd.edges;
    p.walk_colors = fwd.colors;
    p.endpoint_u = v;
    p.endpoint_v = fwd.far;
    return p;
}

EdgeColoring kempe_swap(const EdgeColoring& c, const KempePath& p) {
    EdgeColoring out = c;
    swap_in_place(out, p);
    return out;
}

EdgeColoring konig_color(const EdgeSubgraph& h, int k) {
    const MultiGraph& g = h.host();
    if (!bipartition(g).is_bipartite())
        throw NotBipartiteError("konig_color: host graph is not bipartite");
    if (h.max_degree() > k)
        throw DegreeExceedsKError("konig_color: subgraph max degree " +
                                  std::to_string(h.max_degree()) + " exceeds k=" +
                                  std::to_string(k));

    EdgeColoring c(g, k);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!h.contains(e)) continue;
        const Edge& ed = g.edge(e);
        int common = c.lowest_common_free_color(ed.u, ed.v);
        if (common != 0) {
            c.set_color(e, common);
            continue;
        }
        int alpha = c.lowest_free_color(ed.u);
        int beta = c.lowest_free_color(ed.v);
        // Both exist: each endpoint has an uncolored incident edge (this one)
        // and subgraph degree at most k.
        KempePath chain = kempe_path(c, ed.v, alpha, beta);
        // In a bipartite graph the chain from v cannot end at u: it would
        // close an odd cycle with e.
        if (chain.is_cycle || chain.endpoint_u == ed.u || chain.endpoint_v == ed.u)
            throw std::logic_error("konig_color: Kempe chain reached the opposite endpoint");
        swap_in_place(c, chain);
        c.set_color(e, alpha);
    }
    return c;
}

ColoringReport verify_coloring(const EdgeSubgraph& h, const EdgeColoring& c, int k) {
    ColoringReport rep;
    const MultiGraph& g = h.host();
    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.color_of(e);
        if (h.contains(e) && col == 0) {
            rep.violations.push_back({g.edge(e).u, 0, "uncolored-member", {e}});
        } else if (!h.contains(e) && col != 0) {
            rep.violations.push_back({g.edge(e).u, col, "colored-nonmember", {e}});
        } else if (col < 0 || col > k) {
            rep.violations.push_back({g.edge(e).u, col, "color-range", {e}});
        }
    }
    // adjacent edges sharing a color, reported per (vertex, color)
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::vector<int>> by_color(k + 1);
        for (const auto& [eid, w] : g.incident(v)) {
            int col = c.color_of(eid);
            if (col >= 1 && col <= k && h.contains(eid)) by_color[col].push_back(eid);
        }
        for (int col = 1; col <= k; ++col) {
            if (by_color[col].size() > 1)
                rep.violations.push_back({v, col, "conflict", by_color[col]});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace kecs
