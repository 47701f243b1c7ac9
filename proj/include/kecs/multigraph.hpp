#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kecs {

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotBipartiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    int id;
    int u;
    int v;
};

/// Loopless undirected multigraph. Vertices are 0..n-1, edge ids are dense
/// 0..m-1 in insertion order and stable for the lifetime of the graph.
/// Parallel edges are allowed and carry distinct ids; loops are rejected.
/// Immutable after construction; deletion ops return fresh graphs.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_.at(id); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incident (edge_id, neighbour) pairs in edge insertion order.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    std::vector<int> degree_multiset() const;  // sorted ascending

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

enum class Side : unsigned char { U, W };

/// Result of 2-coloring: either a side per vertex, or an odd closed walk
/// (vertex sequence, first == last, odd number of edges) as the witness
/// that no bipartition exists.
struct Bipartition {
    std::optional<std::vector<Side>> side;
    std::vector<int> odd_walk;

    bool is_bipartite() const { return side.has_value(); }
};

Bipartition bipartition(const MultiGraph& g);

/// Smallest |S| such that G - S is bipartite, by exhaustive subset search in
/// increasing size. Returns nullopt when a cap is given and exceeded.
std::optional<int> odd_cycle_transversal_number(const MultiGraph& g,
                                                std::optional<int> cap = std::nullopt);

struct VertexDeletion {
    MultiGraph graph;
    std::vector<int> edge_map;    // old edge id -> new id, -1 if deleted
    std::vector<int> vertex_map;  // old vertex -> new vertex, -1 for the deleted one
};

struct EdgeDeletion {
    MultiGraph graph;
    std::vector<int> edge_map;
};

VertexDeletion delete_vertex(const MultiGraph& g, int v);
EdgeDeletion delete_edge(const MultiGraph& g, int e);

/// Subset of edge ids of a host graph with cached per-vertex degrees.
class EdgeSubgraph {
public:
    EdgeSubgraph() = default;
    explicit EdgeSubgraph(const MultiGraph& host);
    EdgeSubgraph(const MultiGraph& host, const std::vector<int>& members);

    const MultiGraph& host() const { return *host_; }
    bool contains(int e) const { return member_[e] != 0; }
    void insert(int e);
    void erase(int e);
    int size() const { return count_; }
    int degree(int v) const { return deg_[v]; }
    int max_degree() const;
    std::vector<int> members() const;  // ascending edge ids

private:
    const MultiGraph* host_ = nullptr;
    std::vector<char> member_;
    std::vector<int> deg_;
    int count_ = 0;
};

}  // namespace kecs
