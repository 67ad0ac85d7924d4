#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

struct EmbeddingError : std::runtime_error {
    explicit EmbeddingError(const std::string& what) : std::runtime_error(what) {}
};

/// Rotation system: for every vertex, the cyclic order of its neighbors in a
/// plane drawing. Face tracing follows the successor convention: the directed
/// edge (u,v) continues as (v,w) where w follows u in the rotation of v.
struct PlaneEmbedding {
    std::vector<std::vector<Vertex>> rotation;

    /// Neighbor that follows `from` in the rotation of `at`.
    Vertex successor(Vertex at, Vertex from) const;
};

/// One face of an embedded graph: the boundary walk as directed edge ends.
/// Vertices may repeat along the walk at cut vertices.
struct Face {
    std::vector<std::pair<Vertex, Vertex>> walk;

    int degree() const { return static_cast<int>(walk.size()); }
};

/// Checks that `emb.rotation[v]` is a permutation of the neighbors of v for
/// every vertex. Throws EmbeddingError otherwise.
void validate_embedding(const Graph& g, const PlaneEmbedding& emb);

/// Traces all faces of the rotation system and checks Euler's formula
/// V - E + F = 2 on every connected component; a mismatch means the rotation
/// system does not describe a plane (genus 0) drawing and is reported with a
/// vertex of the offending component. Isolated vertices contribute one face
/// of degree 0.
std::vector<Face> enumerate_faces(const Graph& g, const PlaneEmbedding& emb);

/// Restriction of an embedding to a subset of vertices, with vertices
/// renumbered by `to_original` (local id -> host id). Deleting vertices from a
/// plane drawing keeps it plane, so the restriction is again an embedding.
PlaneEmbedding induced_embedding(const Graph& host, const PlaneEmbedding& emb,
                                 const std::vector<Vertex>& to_original);

}  // namespace aec
