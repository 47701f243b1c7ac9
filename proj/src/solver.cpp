#include "kecs/solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <climits>
#include <deque>
#include <functional>
#include <numeric>

namespace kecs {

std::string method_name(Method m) {
    switch (m) {
        case Method::augmenting: return "augmenting";
        case Method::flow: return "flow";
        case Method::oracle: return "oracle";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& s) {
    if (s == "augmenting" || s == "augment") return Method::augmenting;
    if (s == "flow") return Method::flow;
    if (s == "oracle") return Method::oracle;
    return std::nullopt;
}

namespace {

// Flow encoding of the degree-constrained subgraph problem:
// source -> u (cap min(k, deg)), one unit arc per parallel edge u -> w,
// w -> sink (cap min(k, deg)). Arcs are created in a fixed order (source arcs
// by vertex, edge arcs by edge id, sink arcs by vertex) so both the max-flow
// result and residual BFS paths are deterministic.
struct FlowNet {
    struct Arc {
        int to;
        int rev;
        int cap;  // remaining capacity
        int edge_id;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int nodes) : adj(nodes) {}
    static int source() { return 0; }
    static int sink() { return 1; }
    static int node_of(int vertex) { return 2 + vertex; }

    void add(int a, int b, int cap, int edge_id) {
        adj[a].push_back({b, static_cast<int>(adj[b].size()), cap, edge_id});
        adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0, edge_id});
    }
};

FlowNet build_network(const MultiGraph& g, const std::vector<Side>& side, int k,
                      const EdgeSubgraph* preload) {
    FlowNet net(2 + g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (side[v] != Side::U) continue;
        int cap = std::min(k, g.degree(v));
        int used = preload ? preload->degree(v) : 0;
        net.adj[FlowNet::source()].push_back(
            {FlowNet::node_of(v), static_cast<int>(net.adj[FlowNet::node_of(v)].size()),
             cap - used, -1});
        net.adj[FlowNet::node_of(v)].push_back(
            {FlowNet::source(), static_cast<int>(net.adj[FlowNet::source()].size()) - 1, used,
             -1});
    }
    for (const Edge& e : g.edges()) {
        int u = side[e.u] == Side::U ? e.u : e.v;
        int w = u == e.u ? e.v : e.u;
        bool in = preload && preload->contains(e.id);
        net.adj[FlowNet::node_of(u)].push_back(
            {FlowNet::node_of(w), static_cast<int>(net.adj[FlowNet::node_of(w)].size()),
             in ? 0 : 1, e.id});
        net.adj[FlowNet::node_of(w)].push_back(
            {FlowNet::node_of(u), static_cast<int>(net.adj[FlowNet::node_of(u)].size()) - 1,
             in ? 1 : 0, e.id});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (side[v] != Side::W) continue;
        int cap = std::min(k, g.degree(v));
        int used = preload ? preload->degree(v) : 0;
        net.adj[FlowNet::node_of(v)].push_back(
            {FlowNet::sink(), static_cast<int>(net.adj[FlowNet::sink()].size()), cap - used,
             -1});
        net.adj[FlowNet::sink()].push_back(
            {FlowNet::node_of(v), static_cast<int>(net.adj[FlowNet::node_of(v)].size()) - 1,
             used, -1});
    }
    return net;
}

// Dinic with fixed arc ordering.
struct Dinic {
    FlowNet& net;
    std::vector<int> level, ptr;

    explicit Dinic(FlowNet& n) : net(n), level(n.adj.size()), ptr(n.adj.size()) {}

    bool bfs() {
        std::fill(level.begin(), level.end(), -1);
        std::deque<int> q;
        level[FlowNet::source()] = 0;
        q.push_back(FlowNet::source());
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const auto& a : net.adj[x]) {
                if (a.cap > 0 && level[a.to] == -1) {
                    level[a.to] = level[x] + 1;
                    q.push_back(a.to);
                }
            }
        }
        return level[FlowNet::sink()] != -1;
    }

    int dfs(int x, int pushed) {
        if (x == FlowNet::sink() || pushed == 0) return pushed;
        for (int& i = ptr[x]; i < static_cast<int>(net.adj[x].size()); ++i) {
            auto& a = net.adj[x][i];
            if (a.cap <= 0 || level[a.to] != level[x] + 1) continue;
            int got = dfs(a.to, std::min(pushed, a.cap));
            if (got > 0) {
                a.cap -= got;
                net.adj[a.to][a.rev].cap += got;
                return got;
            }
        }
        return 0;
    }

    long long run() {
        long long flow = 0;
        while (bfs()) {
            std::fill(ptr.begin(), ptr.end(), 0);
            while (int got = dfs(FlowNet::source(), INT_MAX)) flow += got;
        }
        return flow;
    }
};

std::vector<Side> require_bipartite(const MultiGraph& g, const char* who) {
    Bipartition bip = bipartition(g);
    if (!bip.is_bipartite())
        throw NotBipartiteError(std::string(who) + ": graph is not bipartite");
    return std::move(*bip.side);
}

// Shortest residual path source -> sink; the edge-tagged arcs along it are
// exactly the augmenting walk of the combinatorial statement.
std::optional<AugmentingPath> residual_path(const MultiGraph& g, const FlowNet& net,
                                            const EdgeSubgraph& a, int k) {
    const int nodes = static_cast<int>(net.adj.size());
    std::vector<int> par_node(nodes, -1), par_arc(nodes, -1);
    std::deque<int> q;
    par_node[FlowNet::source()] = FlowNet::source();
    q.push_back(FlowNet::source());
    while (!q.empty() && par_node[FlowNet::sink()] == -1) {
        int x = q.front();
        q.pop_front();
        for (int i = 0; i < static_cast<int>(net.adj[x].size()); ++i) {
            const auto& arc = net.adj[x][i];
            if (arc.cap <= 0 || par_node[arc.to] != -1) continue;
            par_node[arc.to] = x;
            par_arc[arc.to] = i;
            q.push_back(arc.to);
        }
    }
    if (par_node[FlowNet::sink()] == -1) return std::nullopt;

    AugmentingPath p;
    p.k = k;
    std::vector<int> rev_walk;
    int last_vertex = -1, first_vertex = -1;
    for (int x = FlowNet::sink(); x != FlowNet::source(); x = par_node[x]) {
        const auto& arc = net.adj[par_node[x]][par_arc[x]];
        if (arc.edge_id >= 0) rev_walk.push_back(arc.edge_id);
        if (x != FlowNet::sink() && last_vertex == -1) last_vertex = x - 2;
        if (par_node[x] != FlowNet::source()) first_vertex = par_node[x] - 2;
    }
    p.walk.assign(rev_walk.rbegin(), rev_walk.rend());
    p.endpoint_u = first_vertex;
    p.endpoint_v = last_vertex;
    assert(p.walk.size() % 2 == 1);
    assert(a.degree(p.endpoint_u) <= k - 1 && a.degree(p.endpoint_v) <= k - 1);
    return p;
}

// Complete but exponential search over simple alternating paths. Used on
// non-bipartite inputs, where the flow encoding does not apply; fine at the
// demonstration scale those inputs have.
std::optional<AugmentingPath> exhaustive_path(const MultiGraph& g, const EdgeSubgraph& a,
                                              int k) {
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<int> walk;
    int start = -1;
    std::optional<AugmentingPath> found;

    std::function<bool(int, bool)> dfs = [&](int cur, bool need_member) -> bool {
        // odd walks end with a non-member edge, i.e. a member edge is due next
        if (need_member && a.degree(cur) <= k - 1) {
            AugmentingPath p;
            p.k = k;
            p.walk = walk;
            p.endpoint_u = start;
            p.endpoint_v = cur;
            found = std::move(p);
            return true;
        }
        for (const auto& [eid, nb] : g.incident(cur)) {
            if (visited[nb]) continue;
            if (a.contains(eid) != need_member) continue;
            visited[nb] = 1;
            walk.push_back(eid);
            if (dfs(nb, !need_member)) return true;
            walk.pop_back();
            visited[nb] = 0;
        }
        return false;
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (a.degree(v) > k - 1) continue;
        start = v;
        visited.assign(g.vertex_count(), 0);
        visited[v] = 1;
        walk.clear();
        if (dfs(v, false)) return found;
    }
    return std::nullopt;
}

SolveResult whole_graph_result(const MultiGraph& g, int k, Method method) {
    SolveResult res;
    res.k = k;
    res.method = method;
    res.nu = g.edge_count();
    res.subgraph = EdgeSubgraph(g);
    for (int e = 0; e < g.edge_count(); ++e) res.subgraph.insert(e);
    res.coloring = konig_color(res.subgraph, k);
    res.stats.shortcut = true;
    res.stats.flow_value = g.edge_count();
    return res;
}

SolveResult empty_result(const MultiGraph& g, int k, Method method) {
    SolveResult res;
    res.k = k;
    res.method = method;
    res.nu = 0;
    res.subgraph = EdgeSubgraph(g);
    res.coloring = EdgeColoring(g, k);
    res.stats.shortcut = true;
    return res;
}

}  // namespace

EdgeSubgraph greedy_initial(const MultiGraph& g, int k) {
    if (k < 0) throw GraphError("greedy_initial: k must be non-negative");
    EdgeSubgraph sub(g);
    if (k == 0) return sub;
    for (const Edge& e : g.edges()) {
        if (sub.degree(e.u) < k && sub.degree(e.v) < k) sub.insert(e.id);
    }
    return sub;
}

std::optional<AugmentingPath> find_augmenting_path(const MultiGraph& g, const EdgeSubgraph& a,
                                                   int k) {
    if (k < 1) return std::nullopt;
    if (a.max_degree() > k) throw GraphError("find_augmenting_path: Delta(A) exceeds k");
    Bipartition bip = bipartition(g);
    if (!bip.is_bipartite()) return exhaustive_path(g, a, k);
    FlowNet net = build_network(g, *bip.side, k, &a);
    return residual_path(g, net, a, k);
}

EdgeSubgraph augment(const EdgeSubgraph& a, const AugmentingPath& p) {
    const MultiGraph& g = a.host();
    const int k = p.k;
    if (p.walk.empty() || p.walk.size() % 2 == 0)
        throw GraphError("augment: walk must have odd length");
    if (a.degree(p.endpoint_u) > k - 1 || a.degree(p.endpoint_v) > k - 1)
        throw GraphError("augment: endpoint degree must be at most k-1");

    // walk the edges, checking alternation, adjacency and vertex-simplicity
    std::vector<char> seen(g.vertex_count(), 0);
    int cur = p.endpoint_u;
    seen[cur] = 1;
    for (size_t i = 0; i < p.walk.size(); ++i) {
        const Edge& e = g.edge(p.walk[i]);
        bool member = a.contains(e.id);
        if (member != (i % 2 == 1))
            throw GraphError("augment: walk does not alternate with the subgraph");
        int nxt;
        if (e.u == cur)
            nxt = e.v;
        else if (e.v == cur)
            nxt = e.u;
        else
            throw GraphError("augment: walk edges are not consecutive");
        if (seen[nxt]) throw GraphError("augment: walk revisits a vertex");
        seen[nxt] = 1;
        cur = nxt;
    }
    if (cur != p.endpoint_v) throw GraphError("augment: walk does not end at endpoint_v");

    EdgeSubgraph out = a;
    for (size_t i = 0; i < p.walk.size(); ++i) {
        if (i % 2 == 0)
            out.insert(p.walk[i]);
        else
            out.erase(p.walk[i]);
    }
    assert(out.size() == a.size() + 1);
    if (out.max_degree() > k) throw std::logic_error("augment: degree bound violated");
    return out;
}

SolveResult solve_augmenting(const MultiGraph& g, int k) {
    if (k < 0) throw GraphError("solve_augmenting: k must be non-negative");
    std::vector<Side> side = require_bipartite(g, "solve_augmenting");
    if (k == 0) return empty_result(g, k, Method::augmenting);
    if (k >= g.max_degree()) return whole_graph_result(g, k, Method::augmenting);

    EdgeSubgraph a = greedy_initial(g, k);
    long long augmentations = 0;
    while (true) {
        FlowNet net = build_network(g, side, k, &a);
        auto p = residual_path(g, net, a, k);
        if (!p) break;
        a = augment(a, *p);
        ++augmentations;
    }
    SolveResult res;
    res.k = k;
    res.method = Method::augmenting;
    res.nu = a.size();
    res.coloring = konig_color(a, k);
    res.subgraph = std::move(a);
    res.stats.augmentations = augmentations;
    return res;
}

SolveResult solve_flow(const MultiGraph& g, int k) {
    if (k < 0) throw GraphError("solve_flow: k must be non-negative");
    std::vector<Side> side = require_bipartite(g, "solve_flow");
    if (k == 0) return empty_result(g, k, Method::flow);
    if (k >= g.max_degree()) return whole_graph_result(g, k, Method::flow);

    FlowNet net = build_network(g, side, k, nullptr);
    Dinic dinic(net);
    long long flow = dinic.run();

    SolveResult res;
    res.k = k;
    res.method = Method::flow;
    res.subgraph = EdgeSubgraph(g);
    for (int x = 0; x < static_cast<int>(net.adj.size()); ++x) {
        for (const auto& arc : net.adj[x]) {
            // a saturated edge arc appears with cap 0 on the forward side
            if (arc.edge_id >= 0 && arc.cap == 0 && x != FlowNet::source()) {
                const Edge& e = g.edge(arc.edge_id);
                int u_side = side[e.u] == Side::U ? e.u : e.v;
                if (x == FlowNet::node_of(u_side)) res.subgraph.insert(arc.edge_id);
            }
        }
    }
    res.nu = res.subgraph.size();
    assert(res.nu == flow);
    res.coloring = konig_color(res.subgraph, k);
    res.stats.flow_value = flow;
    return res;
}

SolveResult nu_oracle(const MultiGraph& g, int k, const OracleOptions& opt) {
    if (k < 0) throw GraphError("nu_oracle: k must be non-negative");
    if (k > 31) throw GraphError("nu_oracle: k larger than 31 is not supported");
    const int m = g.edge_count();
    const int n = g.vertex_count();

    SolveResult res;
    res.k = k;
    res.method = Method::oracle;
    res.subgraph = EdgeSubgraph(g);
    res.coloring = EdgeColoring(g, k);
    if (k == 0 || m == 0) return res;

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(g.edge(a).u) + g.degree(g.edge(a).v);
        int db = g.degree(g.edge(b).u) + g.degree(g.edge(b).v);
        if (da != db) return da > db;
        return a < b;
    });

    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::uint32_t> used(n, 0);
    std::vector<int> cur_assign(m, 0), best_assign(m, 0);
    int best = 0;

    if (opt.seed) {
        const SolveResult& s = *opt.seed;
        if (s.subgraph.host().edge_count() != m)
            throw std::logic_error("nu_oracle: seed built for a different graph");
        if (!verify_coloring(s.subgraph, s.coloring, k).ok)
            throw std::logic_error("nu_oracle: seed coloring is not a proper k-coloring");
        for (int e = 0; e < m; ++e) best_assign[e] = s.coloring.color_of(e);
        best = s.subgraph.size();
    }

    // first-fit greedy along the branch order as a baseline lower bound
    {
        std::vector<int> greedy(m, 0);
        int count = 0;
        for (int e : order) {
            const Edge& ed = g.edge(e);
            std::uint32_t free = ~(used[ed.u] | used[ed.v]) & full;
            if (free == 0) continue;
            int c = std::countr_zero(free);
            used[ed.u] |= 1u << c;
            used[ed.v] |= 1u << c;
            greedy[e] = c + 1;
            ++count;
        }
        if (count > best) {
            best = count;
            best_assign = greedy;
        }
        std::fill(used.begin(), used.end(), 0);
    }

    long long hard_cap = std::min<long long>(m, opt.upper_bound.value_or(LLONG_MAX));
    std::vector<int> rem_deg(n, 0);
    for (const Edge& e : g.edges()) {
        ++rem_deg[e.u];
        ++rem_deg[e.v];
    }

    auto capacity_bound = [&]() {
        long long s = 0;
        for (int v = 0; v < n; ++v)
            s += std::min<int>(k - std::popcount(used[v]), rem_deg[v]);
        return s / 2;
    };

    long long nodes = 0;
    bool exhausted = false;
    int colored = 0;
    int colors_in_use = 0;

    std::function<void(int)> rec = [&](int idx) {
        if (exhausted) return;
        if (++nodes > opt.node_budget) {
            exhausted = true;
            return;
        }
        if (best >= hard_cap) return;
        if (idx == m) return;
        long long room = std::min<long long>(m - idx, capacity_bound());
        if (colored + room <= best) return;

        int e = order[idx];
        const Edge& ed = g.edge(e);
        --rem_deg[ed.u];
        --rem_deg[ed.v];
        std::uint32_t avail = ~(used[ed.u] | used[ed.v]) & full;
        // new color classes are introduced in canonical order
        if (colors_in_use < k) avail &= (1u << (colors_in_use + 1)) - 1;
        while (avail != 0 && !exhausted) {
            int c = std::countr_zero(avail);
            avail &= avail - 1;
            std::uint32_t bit = 1u << c;
            used[ed.u] |= bit;
            used[ed.v] |= bit;
            cur_assign[e] = c + 1;
            ++colored;
            int saved = colors_in_use;
            colors_in_use = std::max(colors_in_use, c + 1);
            if (colored > best) {
                best = colored;
                best_assign = cur_assign;
            }
            rec(idx + 1);
            colors_in_use = saved;
            --colored;
            cur_assign[e] = 0;
            used[ed.u] &= ~bit;
            used[ed.v] &= ~bit;
        }
        if (!exhausted) rec(idx + 1);  // skip branch
        ++rem_deg[ed.u];
        ++rem_deg[ed.v];
    };
    rec(0);

    for (int e = 0; e < m; ++e) {
        if (best_assign[e] != 0) {
            res.subgraph.insert(e);
            res.coloring.set_color(e, best_assign[e]);
        }
    }
    res.nu = res.subgraph.size();
    assert(res.nu == best);
    res.stats.nodes_explored = nodes;
    res.stats.budget_exhausted = exhausted;
    return res;
}

}  // namespace kecs
