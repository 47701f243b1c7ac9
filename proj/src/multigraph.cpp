#include "kecs/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace kecs {

MultiGraph::MultiGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    adj_.resize(n_);
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n_));
        if (u == v)
            throw GraphError("loop edge rejected (loopless multigraph model): vertex " +
                             std::to_string(u));
        int id = static_cast<int>(edges_.size());
        edges_.push_back({id, u, v});
        adj_[u].emplace_back(id, v);
        adj_[v].emplace_back(id, u);
    }
}

int MultiGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> MultiGraph::degree_multiset() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// BFS 2-coloring that can skip a removed vertex set; fills parent/depth only
// when asked (the witness path needs them).
bool two_color(const MultiGraph& g, const std::vector<char>* removed, std::vector<int>& color,
               std::vector<int>* parent, std::vector<int>* conflict) {
    const int n = g.vertex_count();
    color.assign(n, -1);
    if (parent) parent->assign(n, -1);
    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1 || (removed && (*removed)[root])) continue;
        color[root] = 0;
        queue.clear();
        queue.push_back(root);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& [eid, y] : g.incident(x)) {
                if (removed && (*removed)[y]) continue;
                if (color[y] == -1) {
                    color[y] = color[x] ^ 1;
                    if (parent) (*parent)[y] = x;
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    if (conflict) *conflict = {x, y};
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

Bipartition bipartition(const MultiGraph& g) {
    std::vector<int> color, parent, conflict;
    Bipartition out;
    if (two_color(g, nullptr, color, &parent, &conflict)) {
        std::vector<Side> side(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            side[v] = color[v] == 0 ? Side::U : Side::W;
        out.side = std::move(side);
        return out;
    }
    // Conflict edge (x, y) with equal colors: the tree paths to the common
    // root plus the edge form a closed walk of odd length.
    int x = conflict[0], y = conflict[1];
    std::vector<int> up_x, up_y;
    for (int v = x; v != -1; v = parent[v]) up_x.push_back(v);
    for (int v = y; v != -1; v = parent[v]) up_y.push_back(v);
    std::reverse(up_x.begin(), up_x.end());  // root .. x
    out.odd_walk = up_x;
    out.odd_walk.insert(out.odd_walk.end(), up_y.begin(), up_y.end());  // .. y .. root
    return out;
}

std::optional<int> odd_cycle_transversal_number(const MultiGraph& g, std::optional<int> cap) {
    const int n = g.vertex_count();
    const int limit = cap ? std::min(*cap, n) : n;
    std::vector<char> removed(n, 0);
    std::vector<int> color;
    std::vector<int> pick;
    // combinations of size s in lexicographic order
    std::function<bool(int, int)> choose = [&](int next, int need) -> bool {
        if (need == 0) return two_color(g, &removed, color, nullptr, nullptr);
        for (int v = next; v <= n - need; ++v) {
            removed[v] = 1;
            if (choose(v + 1, need - 1)) return true;
            removed[v] = 0;
        }
        return false;
    };
    for (int s = 0; s <= limit; ++s) {
        if (choose(0, s)) return s;
    }
    return std::nullopt;  // exceeds cap
}

VertexDeletion delete_vertex(const MultiGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw GraphError("delete_vertex: vertex out of range");
    VertexDeletion out;
    out.vertex_map.assign(g.vertex_count(), -1);
    int next = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) out.vertex_map[w] = next++;
    out.edge_map.assign(g.edge_count(), -1);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        out.edge_map[e.id] = static_cast<int>(edges.size());
        edges.emplace_back(out.vertex_map[e.u], out.vertex_map[e.v]);
    }
    out.graph = MultiGraph(g.vertex_count() - 1, edges);
    return out;
}

EdgeDeletion delete_edge(const MultiGraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("delete_edge: edge out of range");
    EdgeDeletion out;
    out.edge_map.assign(g.edge_count(), -1);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& ed : g.edges()) {
        if (ed.id == e) continue;
        out.edge_map[ed.id] = static_cast<int>(edges.size());
        edges.emplace_back(ed.u, ed.v);
    }
    out.graph = MultiGraph(g.vertex_count(), edges);
    return out;
}

EdgeSubgraph::EdgeSubgraph(const MultiGraph& host)
    : host_(&host), member_(host.edge_count(), 0), deg_(host.vertex_count(), 0) {}

EdgeSubgraph::EdgeSubgraph(const MultiGraph& host, const std::vector<int>& members)
    : EdgeSubgraph(host) {
    for (int e : members) insert(e);
}

void EdgeSubgraph::insert(int e) {
    if (member_[e]) return;
    member_[e] = 1;
    const Edge& ed = host_->edge(e);
    ++deg_[ed.u];
    ++deg_[ed.v];
    ++count_;
}

void EdgeSubgraph::erase(int e) {
    if (!member_[e]) return;
    member_[e] = 0;
    const Edge& ed = host_->edge(e);
    --deg_[ed.u];
    --deg_[ed.v];
    --count_;
}

int EdgeSubgraph::max_degree() const {
    int d = 0;
    for (int x : deg_) d = std::max(d, x);
    return d;
}

std::vector<int> EdgeSubgraph::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int e = 0; e < static_cast<int>(member_.size()); ++e)
        if (member_[e]) out.push_back(e);
    return out;
}

}  // namespace kecs
