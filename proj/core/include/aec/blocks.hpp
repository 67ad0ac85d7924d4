#pragma once

#include <vector>

#include "aec/graph.hpp"

namespace aec {

/// Block-cut decomposition. Every edge lies in exactly one block (a maximal
/// 2-connected subgraph or a bridge), and every cycle lies inside one block.
struct BlockTree {
    struct Block {
        std::vector<EdgeId> edges;
        std::vector<Vertex> vertices;  // sorted
    };
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;  // sorted

    bool is_cut_vertex(Vertex v) const;
    /// Blocks containing a given vertex, in block index order.
    std::vector<int> blocks_of_vertex(Vertex v, int n) const;
};

BlockTree block_decompose(const Graph& g);

/// n >= 3, connected, no cut vertices.
bool is_two_connected(const Graph& g);

}  // namespace aec
