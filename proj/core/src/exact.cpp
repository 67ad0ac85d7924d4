#include <algorithm>

#include "aec/colorize.hpp"

namespace aec {

namespace {

// Vertex elimination order by repeated minimum-degree removal.
std::vector<int> degeneracy_rank(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), rank(n, -1);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> gone(n, 0);
    for (int step = n - 1; step >= 0; --step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        gone[best] = 1;
        rank[best] = step;  // removed first -> largest rank (colored last)
        for (auto [w, e] : g.neighbors(best))
            if (!gone[w]) deg[w]--;
    }
    return rank;
}

struct Searcher {
    const Graph& g;
    int k;
    long cap;
    long nodes = 0;
    bool capped = false;
    EdgeColoring col;
    std::vector<EdgeId> order;

    Searcher(const Graph& gr, int kk, long cp) : g(gr), k(kk), cap(cp), col(gr.edge_count(), kk) {}

    bool creates_bichromatic_cycle(EdgeId e, int c) const {
        auto [u, v] = g.edge(e);
        for (auto [w, f] : g.neighbors(u)) {
            if (!col.colored(f) || f == e) continue;
            int b = col.color(f);
            if (b == c) continue;
            // potential (c,b)-cycle through e: b must also appear at v
            bool b_at_v = false;
            for (auto [x, h] : g.neighbors(v))
                if (col.colored(h) && col.color(h) == b) b_at_v = true;
            if (!b_at_v) continue;
            if (exists_bichromatic_path(g, col, u, v, c, b)) return true;
        }
        return false;
    }

    bool dfs(size_t idx) {
        if (idx == order.size()) return true;
        EdgeId e = order[idx];
        auto [u, v] = g.edge(e);
        int kmax = idx == 0 ? 1 : k;  // first edge fixed to color 1
        for (int c = 1; c <= kmax; ++c) {
            if (++nodes > cap) {
                capped = true;
                return false;
            }
            bool proper = true;
            for (auto [w, f] : g.neighbors(u))
                if (col.colored(f) && col.color(f) == c) proper = false;
            for (auto [w, f] : g.neighbors(v))
                if (proper && col.colored(f) && col.color(f) == c) proper = false;
            if (!proper) continue;
            if (creates_bichromatic_cycle(e, c)) continue;
            col.set(e, c);
            if (dfs(idx + 1)) return true;
            col.unset(e);
            if (capped) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<EdgeColoring> exact_color_small(const Graph& g, int k, long node_cap, bool* capped) {
    if (capped) *capped = false;
    if (g.edge_count() == 0) return EdgeColoring(0, k);
    if (k < 1) return std::nullopt;

    Searcher s(g, k, node_cap);
    auto rank = degeneracy_rank(g);
    s.order.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) s.order[e] = e;
    auto key = [&](EdgeId e) {
        auto [u, v] = g.edge(e);
        int a = rank[u], b = rank[v];
        if (a > b) std::swap(a, b);
        return std::pair(b, a);
    };
    std::sort(s.order.begin(), s.order.end(),
              [&](EdgeId a, EdgeId b) { return key(a) < key(b); });

    if (s.dfs(0)) return s.col;
    if (capped) *capped = s.capped;
    return std::nullopt;
}

}  // namespace aec
