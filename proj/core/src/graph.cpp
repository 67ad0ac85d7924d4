#include "aec/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace aec {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphError("edge " + std::to_string(i) + ": endpoint out of range (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw GraphError("edge " + std::to_string(i) + ": self-loop at vertex " +
                             std::to_string(a));
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw GraphError("edge " + std::to_string(i) + ": parallel edge (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({a, b});
        g.adj_[a].push_back({b, id});
        g.adj_[b].push_back({a, id});
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
    }
    return g;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, EdgeId{0}));
    if (it != nb.end() && it->first == v) return it->second;
    return std::nullopt;
}

int Graph::neighbors_with_degree(Vertex v, int k) const {
    int c = 0;
    for (auto [w, e] : adj_[v]) c += degree(w) == k;
    return c;
}

int Graph::neighbors_with_degree_at_most(Vertex v, int k) const {
    int c = 0;
    for (auto [w, e] : adj_[v]) c += degree(w) <= k;
    return c;
}

int Graph::neighbors_with_degree_at_least(Vertex v, int k) const {
    int c = 0;
    for (auto [w, e] : adj_[v]) c += degree(w) >= k;
    return c;
}

std::map<int, int> Graph::degree_census(Vertex v) const {
    std::map<int, int> census;
    for (auto [w, e] : adj_[v]) census[degree(w)]++;
    return census;
}

Graph Graph::without_edge(EdgeId e) const {
    std::vector<std::pair<int, int>> list;
    list.reserve(edges_.size() - 1);
    for (EdgeId i = 0; i < edge_count(); ++i) {
        if (i == e) continue;
        list.push_back({edges_[i].u, edges_[i].v});
    }
    return from_edge_list(n_, list);
}

std::pair<Graph, std::vector<EdgeId>> Graph::edge_subgraph(const std::vector<EdgeId>& keep) const {
    std::vector<std::pair<int, int>> list;
    list.reserve(keep.size());
    for (EdgeId e : keep) list.push_back({edges_[e].u, edges_[e].v});
    return {from_edge_list(n_, list), keep};
}

std::vector<std::vector<Vertex>> Graph::connected_components() const {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comps.back().push_back(v);
            for (auto [w, e] : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool Graph::is_connected() const { return connected_components().size() <= 1; }

StripResult strip_two_vertices(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> keep(n, 1);
    for (Vertex v = 0; v < n; ++v) keep[v] = g.degree(v) != 2;

    StripResult res;
    res.location.assign(n, {-1, -1});
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (!keep[s] || seen[s]) continue;
        std::vector<Vertex> verts;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            verts.push_back(v);
            for (auto [w, e] : g.neighbors(v)) {
                if (keep[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        int comp = static_cast<int>(res.components.size());
        std::vector<int> local(n, -1);
        for (size_t i = 0; i < verts.size(); ++i) {
            local[verts[i]] = static_cast<int>(i);
            res.location[verts[i]] = {comp, static_cast<int>(i)};
        }
        std::vector<std::pair<int, int>> edges;
        for (Vertex v : verts)
            for (auto [w, e] : g.neighbors(v))
                if (keep[w] && v < w) edges.push_back({local[v], local[w]});
        res.components.push_back(Graph::from_edge_list(static_cast<int>(verts.size()), edges));
        res.to_original.push_back(std::move(verts));
    }
    return res;
}

}  // namespace aec
