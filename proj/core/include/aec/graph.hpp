#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aec {

using Vertex = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Edge endpoints, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and dense edge ids
/// 0..m-1. Immutable after construction; adjacency lists are sorted by
/// neighbor id so every traversal order is reproducible.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Rejects self-loops, parallel edges and
    /// out-of-range endpoints.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    int min_degree() const;

    /// Neighbors of v as (neighbor, edge id), sorted by neighbor id.
    const std::vector<std::pair<Vertex, EdgeId>>& neighbors(Vertex v) const { return adj_[v]; }

    bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v).has_value(); }
    std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;

    /// n_k(v): number of neighbors of v whose degree is exactly k.
    int neighbors_with_degree(Vertex v, int k) const;
    /// n_{k^-}(v): neighbors with degree <= k.
    int neighbors_with_degree_at_most(Vertex v, int k) const;
    /// n_{k^+}(v): neighbors with degree >= k.
    int neighbors_with_degree_at_least(Vertex v, int k) const;

    /// Full census k -> n_k(v).
    std::map<int, int> degree_census(Vertex v) const;

    /// Copy without one edge; edge ids above `e` shift down by one.
    Graph without_edge(EdgeId e) const;

    /// Subgraph on the given edge ids (same vertex set, edges re-indexed in
    /// the order given). Edge ids map back via the returned vector.
    std::pair<Graph, std::vector<EdgeId>> edge_subgraph(const std::vector<EdgeId>& keep) const;

    std::vector<std::vector<Vertex>> connected_components() const;
    bool is_connected() const;

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
};

/// Result of deleting all 2-vertices: the components of the derived graph,
/// with a mapping back to the host graph so both degree views stay queryable.
struct StripResult {
    std::vector<Graph> components;
    /// Per component: local vertex id -> vertex id in the original graph.
    std::vector<std::vector<Vertex>> to_original;
    /// Original vertex id -> (component, local id), or (-1,-1) if removed.
    std::vector<std::pair<int, int>> location;
};

/// Removes every vertex of degree exactly 2 (single pass) and splits the rest
/// into connected components. Vertices of degree 0 or 1 survive.
StripResult strip_two_vertices(const Graph& g);

}  // namespace aec
