#include "aec/colorize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace aec {

VerifyResult ColorizerState::verify() const {
    if (active.empty()) return verify_acyclic(*graph, coloring, palette_size);
    return verify_acyclic_masked(*graph, coloring, palette_size, active);
}

namespace {

struct Ctx {
    const ColorizeOptions& opts;
    ExtensionTrace trace;
    int fallbacks = 0;
};

EdgeColoring color_rec(const Graph& g, int palette, Ctx& ctx);

EdgeColoring rainbow(const Graph& g, int palette) {
    EdgeColoring col(g.edge_count(), palette);
    for (EdgeId e = 0; e < g.edge_count(); ++e) col.set(e, e + 1);
    return col;
}

EdgeColoring color_small_degree(const Graph& g, int palette, Ctx& ctx) {
    // Graphs of maximum degree <= 4 are acyclically 7-colorable; exact search
    // substitutes for the cited construction, retrying with the full palette
    // if the 7-color search runs out of budget.
    int first_try = std::min(7, palette);
    bool capped = false;
    if (auto col = exact_color_small(g, first_try, ctx.opts.exact_node_cap, &capped)) {
        EdgeColoring out(g.edge_count(), palette);
        for (EdgeId e = 0; e < g.edge_count(); ++e) out.set(e, col->color(e));
        return out;
    }
    if (first_try < palette) {
        capped = false;
        if (auto col = exact_color_small(g, palette, 8 * ctx.opts.exact_node_cap, &capped)) {
            EdgeColoring out(g.edge_count(), palette);
            for (EdgeId e = 0; e < g.edge_count(); ++e) out.set(e, col->color(e));
            return out;
        }
    }
    throw ExtensionFailedError(ctx.trace);
}

EdgeColoring color_blocks(const Graph& g, const BlockTree& bt, int palette, Ctx& ctx) {
    std::vector<EdgeColoring> block_colorings;
    for (const auto& blk : bt.blocks) {
        auto [sub, mapping] = g.edge_subgraph(blk.edges);
        block_colorings.push_back(color_rec(sub, palette, ctx));
    }
    return merge_blocks(g, bt, block_colorings, palette);
}

// Inductive chain: repeatedly deletes the removal edge of a detected
// configuration until a base case applies, then extends back up, one edge at
// a time, never changing the palette.
EdgeColoring color_chain(const Graph& g, int palette, Ctx& ctx) {
    std::vector<char> active(g.edge_count(), 1);
    struct Level {
        Configuration cfg;
        EdgeId edge;
    };
    std::vector<Level> chain;

    std::vector<EdgeId> live(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) live[e] = e;

    EdgeColoring col(g.edge_count(), palette);
    while (true) {
        auto [cur, mapping] = g.edge_subgraph(live);
        bool base = cur.edge_count() <= palette || cur.max_degree() <= 4;
        BlockTree bt;
        if (!base) {
            bt = block_decompose(cur);
            base = bt.blocks.size() != 1;
        }
        if (base) {
            EdgeColoring base_col =
                cur.edge_count() <= palette ? rainbow(cur, palette)
                : cur.max_degree() <= 4     ? color_small_degree(cur, palette, ctx)
                                            : color_blocks(cur, bt, palette, ctx);
            for (EdgeId e = 0; e < cur.edge_count(); ++e) col.set(mapping[e], base_col.color(e));
            break;
        }
        auto cfg = find_configuration(cur);
        if (!cfg) throw NoConfigurationError();
        EdgeId local = *cur.edge_between(cfg->removal_edge.first, cfg->removal_edge.second);
        EdgeId global = mapping[local];
        chain.push_back({*cfg, global});
        active[global] = 0;
        live.erase(std::find(live.begin(), live.end(), global));
    }

    // Extend back up.
    ColorizerState st;
    st.graph = &g;
    st.palette_size = palette;
    st.options = ctx.opts;
    st.coloring = std::move(col);
    st.active = active;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        st.active[it->edge] = 1;
        try {
            extend_coloring(st, it->cfg);
        } catch (const BranchMismatchError&) {
            st.fallback_incidents++;
            fallback_extend(st, it->edge);
        }
    }
    ctx.fallbacks += st.fallback_incidents;
    for (auto& step : st.trace.steps) ctx.trace.steps.push_back(step);
    return st.coloring;
}

EdgeColoring color_rec(const Graph& g, int palette, Ctx& ctx) {
    if (g.edge_count() == 0) return EdgeColoring(0, palette);
    if (g.edge_count() <= palette) return rainbow(g, palette);
    if (g.max_degree() <= 4) return color_small_degree(g, palette, ctx);
    BlockTree bt = block_decompose(g);
    if (bt.blocks.size() != 1) return color_blocks(g, bt, palette, ctx);
    return color_chain(g, palette, ctx);
}

}  // namespace

ColorResult acyclic_color(const Graph& g, const ColorizeOptions& opts) {
    Ctx ctx{opts};
    const int palette = g.max_degree() + 7;
    EdgeColoring col = color_rec(g, palette, ctx);
    auto vr = verify_acyclic(g, col, palette);
    if (!vr.accepted) throw ExtensionFailedError(ctx.trace);

    ColorResult res;
    res.coloring = std::move(col);
    res.palette = palette;
    res.fallback_incidents = ctx.fallbacks;
    res.trace = std::move(ctx.trace);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        res.max_color_used = std::max(res.max_color_used, res.coloring.color(e));
    return res;
}

EdgeColoring merge_blocks(const Graph& g, const BlockTree& bt,
                          const std::vector<EdgeColoring>& block_colorings, int palette) {
    if (bt.blocks.size() != block_colorings.size())
        throw GraphError("merge_blocks: one coloring per block expected");
    EdgeColoring out(g.edge_count(), palette);
    std::vector<std::set<int>> at_vertex(g.vertex_count());
    std::vector<char> merged(bt.blocks.size(), 0);

    // BFS over the block forest so each new block meets the processed part in
    // at most one cut vertex.
    std::vector<std::vector<int>> blocks_at(g.vertex_count());
    for (size_t b = 0; b < bt.blocks.size(); ++b)
        for (Vertex v : bt.blocks[b].vertices) blocks_at[v].push_back(static_cast<int>(b));

    std::queue<int> order;
    for (size_t root = 0; root < bt.blocks.size(); ++root) {
        if (merged[root]) continue;
        std::queue<int> q;
        q.push(static_cast<int>(root));
        merged[root] = 1;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            const auto& blk = bt.blocks[b];
            const auto& bc = block_colorings[b];

            // Colors used in this block, and the constraint sets per color.
            std::set<int> used;
            for (int c : bc.raw())
                if (c != kUncolored) used.insert(c);
            std::map<int, std::set<int>> forbidden;  // block color -> banned targets
            for (size_t i = 0; i < blk.edges.size(); ++i) {
                auto [x, y] = g.edge(blk.edges[i]);
                for (Vertex end : {x, y}) {
                    if (at_vertex[end].empty()) continue;
                    forbidden[bc.color(static_cast<int>(i))].insert(at_vertex[end].begin(),
                                                                    at_vertex[end].end());
                }
            }
            std::map<int, int> perm;
            std::set<int> taken;
            for (int c : used) {
                int target = 0;
                auto banned = forbidden.find(c);
                auto ok = [&](int t) {
                    if (taken.count(t)) return false;
                    return banned == forbidden.end() || !banned->second.count(t);
                };
                if (ok(c)) {
                    target = c;  // prefer identity
                } else {
                    for (int t = 1; t <= palette; ++t)
                        if (ok(t)) {
                            target = t;
                            break;
                        }
                    if (target == 0) throw GraphError("merge_blocks: palette too small");
                }
                perm[c] = target;
                taken.insert(target);
            }
            for (size_t i = 0; i < blk.edges.size(); ++i) {
                int c = perm.at(bc.color(static_cast<int>(i)));
                out.set(blk.edges[i], c);
                at_vertex[g.edge(blk.edges[i]).u].insert(c);
                at_vertex[g.edge(blk.edges[i]).v].insert(c);
            }
            for (Vertex v : blk.vertices)
                for (int nb : blocks_at[v])
                    if (!merged[nb]) {
                        merged[nb] = 1;
                        q.push(nb);
                    }
        }
    }
    auto vr = verify_acyclic(g, out, palette);
    if (!vr.accepted) throw GraphError("merge_blocks: result rejected: " + vr.describe());
    return out;
}

void fallback_extend(ColorizerState& state, EdgeId uv) {
    const Graph& g = *state.graph;
    const int K = state.palette_size;
    auto [u, v] = g.edge(uv);

    // Vertices within graph distance 2 of the endpoints, over active edges.
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[u] = dist[v] = 0;
    q.push(u);
    q.push(v);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        if (dist[x] == 2) continue;
        for (auto [y, e] : g.neighbors(x)) {
            if (!state.edge_active(e) || dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            q.push(y);
        }
    }
    std::vector<EdgeId> cands;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == uv || !state.edge_active(e) || !state.coloring.colored(e)) continue;
        if (dist[g.edge(e).u] >= 0 && dist[g.edge(e).v] >= 0) cands.push_back(e);
    }

    long nodes = 0;
    TraceStep step;
    step.branch = "fallback";
    EdgeColoring& col = state.coloring;

    // Properness of edge e against edges that can no longer change: every
    // edge not among cands[from..] may still be recolored later.
    auto proper_against_fixed = [&](EdgeId e, size_t from) {
        int c = col.color(e);
        for (Vertex end : {g.edge(e).u, g.edge(e).v}) {
            for (auto [w, f] : g.neighbors(end)) {
                if (f == e || !col.colored(f)) continue;
                if (col.color(f) != c) continue;
                bool mutable_later = false;
                for (size_t j = from; j < cands.size(); ++j)
                    if (cands[j] == f) mutable_later = true;
                if (!mutable_later) return false;
            }
        }
        return true;
    };

    auto try_uv = [&](std::vector<RecolorOp>& ops) {
        for (int c = 1; c <= K; ++c) {
            col.set(uv, c);
            if (++nodes > state.options.fallback_node_cap) {
                col.unset(uv);
                throw ExtensionFailedError(state.trace);
            }
            if (!proper_against_fixed(uv, cands.size())) {
                col.unset(uv);
                continue;
            }
            if (state.verify().accepted) {
                ops.push_back({uv, kUncolored, c});
                return true;
            }
            col.unset(uv);
        }
        return false;
    };

    std::vector<RecolorOp> ops;
    std::function<bool(size_t, int)> dfs = [&](size_t from, int budget) -> bool {
        if (try_uv(ops)) return true;
        if (budget == 0) return false;
        for (size_t i = from; i < cands.size(); ++i) {
            EdgeId e = cands[i];
            int old = col.color(e);
            for (int c = 1; c <= K; ++c) {
                if (c == old) continue;
                if (++nodes > state.options.fallback_node_cap)
                    throw ExtensionFailedError(state.trace);
                col.set(e, c);
                if (!proper_against_fixed(e, i + 1)) {
                    col.set(e, old);
                    continue;
                }
                ops.push_back({e, old, c});
                if (dfs(i + 1, budget - 1)) return true;
                ops.pop_back();
                col.set(e, old);
            }
        }
        return false;
    };

    EdgeColoring snapshot = col;
    try {
        for (int radius = 0; radius <= state.options.fallback_radius; ++radius) {
            if (dfs(0, radius)) {
                step.ops = ops;
                if (state.options.record_trace) state.trace.steps.push_back(std::move(step));
                return;
            }
        }
    } catch (const ExtensionFailedError&) {
        col = snapshot;
        throw;
    }
    col = snapshot;
    throw ExtensionFailedError(state.trace);
}

}  // namespace aec
