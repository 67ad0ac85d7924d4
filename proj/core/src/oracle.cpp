#include "aec/oracle.hpp"

#include <algorithm>

#include "aec/colorize.hpp"

namespace aec {

namespace {

bool subset_is_cycle(const Graph& g, unsigned mask) {
    // 2-regular on its support and connected.
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!(mask >> e & 1u)) continue;
        edges.push_back(e);
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    if (edges.size() < 3) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (deg[v] != 0 && deg[v] != 2) return false;
    // walk from one edge; a 2-regular graph is a cycle iff the walk covers it
    std::vector<char> used(g.edge_count(), 0);
    Vertex start = g.edge(edges[0]).u;
    Vertex cur = start;
    size_t covered = 0;
    while (true) {
        EdgeId next = -1;
        for (auto [w, e] : g.neighbors(cur))
            if ((mask >> e & 1u) && !used[e]) {
                next = e;
                break;
            }
        if (next < 0) break;
        used[next] = 1;
        covered++;
        cur = g.edge(next).other(cur);
        if (cur == start) break;
    }
    return covered == edges.size() && cur == start;
}

}  // namespace

bool oracle_accepts(const Graph& g, const EdgeColoring& c, int k) {
    const int m = g.edge_count();
    if (m > 22) throw GraphError("oracle_accepts: graph too large for subset enumeration");
    for (EdgeId e = 0; e < m; ++e)
        if (!c.colored(e) || c.color(e) < 1 || c.color(e) > k) return false;
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f) {
            const Edge &a = g.edge(e), &b = g.edge(f);
            bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (share && c.color(e) == c.color(f)) return false;
        }
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        if (!subset_is_cycle(g, mask)) continue;
        std::vector<int> colors;
        for (EdgeId e = 0; e < m; ++e)
            if (mask >> e & 1u) colors.push_back(c.color(e));
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        if (colors.size() == 2) return false;
    }
    return true;
}

std::variant<int, ExceedsCap, ResourceCapHit> exact_acyclic_index(const Graph& g, int k_max,
                                                                  long node_cap) {
    if (g.edge_count() == 0) return 0;
    int lo = std::max(1, g.max_degree());
    for (int k = lo; k <= k_max; ++k) {
        bool capped = false;
        auto col = exact_color_small(g, k, node_cap, &capped);
        if (col) return k;
        if (capped) return ResourceCapHit{};
    }
    return ExceedsCap{k_max};
}

}  // namespace aec
