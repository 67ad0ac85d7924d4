#include "aec/blocks.hpp"

#include <algorithm>
#include <set>

namespace aec {

bool BlockTree::is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockTree::blocks_of_vertex(Vertex v, int n) const {
    (void)n;
    std::vector<int> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].vertices.begin(), blocks[b].vertices.end(), v))
            out.push_back(static_cast<int>(b));
    return out;
}

// Iterative Hopcroft-Tarjan with an explicit edge stack. Tree edges are
// identified by edge id, so the parent edge is skipped exactly once.
BlockTree block_decompose(const Graph& g) {
    const int n = g.vertex_count();
    BlockTree bt;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        size_t next = 0;
        int children = 0;
    };

    auto pop_block = [&](EdgeId until_edge) {
        BlockTree::Block blk;
        std::set<Vertex> verts;
        while (!edge_stack.empty()) {
            EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            blk.edges.push_back(e);
            verts.insert(g.edge(e).u);
            verts.insert(g.edge(e).v);
            if (e == until_edge) break;
        }
        std::sort(blk.edges.begin(), blk.edges.end());
        blk.vertices.assign(verts.begin(), verts.end());
        bt.blocks.push_back(std::move(blk));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& nbrs = g.neighbors(fr.v);
            if (fr.next < nbrs.size()) {
                auto [w, e] = nbrs[fr.next++];
                if (e == fr.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    fr.children++;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[fr.v]) {
                    edge_stack.push_back(e);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (stack.empty()) break;
                Frame& par = stack.back();
                low[par.v] = std::min(low[par.v], low[done.v]);
                if (low[done.v] >= disc[par.v]) {
                    pop_block(done.parent_edge);
                    if (par.parent_edge != -1 || par.children > 1) is_cut[par.v] = 1;
                }
            }
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) bt.cut_vertices.push_back(v);
    return bt;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !g.is_connected()) return false;
    return block_decompose(g).cut_vertices.empty();
}

}  // namespace aec
