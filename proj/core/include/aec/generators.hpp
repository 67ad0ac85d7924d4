#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aec/embedding.hpp"
#include "aec/graph.hpp"

namespace aec {

enum class Family {
    Cycle,
    Wheel,
    Grid,
    Complete,
    Prism,
    Icosahedron,
    StackedTriangulation,
    Subdivided,
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

/// Description of one corpus instance. Every family is planar by
/// construction and deterministic under a fixed seed.
/// Subdivided wraps a base family: params = {edge_count, base_family_code,
/// base_params...}.
struct CorpusSpec {
    Family family{};
    std::vector<int> params;
    std::uint32_t seed = 0;
};

CorpusSpec make_subdivided(const CorpusSpec& base, int edges_to_subdivide);

struct GeneratedGraph {
    Graph graph;
    std::optional<PlaneEmbedding> embedding;
    std::string name;
};

GeneratedGraph generate(const CorpusSpec& spec);

/// Plane graph under construction: rotations plus the current face walks.
/// Supports vertex stacking into triangular faces (maximal planar graphs by
/// repeated insertion), 2-vertex attachment across a face edge, and edge
/// subdivision, all maintaining the rotation system.
class PlanarBuilder {
public:
    static PlanarBuilder from(const Graph& g, const PlaneEmbedding& emb);
    static PlanarBuilder tetrahedron();

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    /// Faces as vertex walks: face {a,b,c,...} stands for directed edges
    /// a->b, b->c, ..., back to a.
    const std::vector<std::vector<Vertex>>& faces() const { return faces_; }

    /// New vertex adjacent to the three corners of a triangular face.
    Vertex stack_into_face(int face_index);
    /// New 2-vertex adjacent to both endpoints of the directed edge at
    /// `edge_pos` of the face walk, placed inside that face.
    Vertex attach_two_vertex(int face_index, int edge_pos);
    /// Replaces edge (u,v) by a path u-w-v.
    Vertex subdivide_edge(Vertex u, Vertex v);

    /// Raises d_H of `v` by stacking into faces incident to v whose other
    /// corners avoid `avoid`; returns false if no room. Degrees of the other
    /// corners of chosen faces grow too.
    bool boost_degree(Vertex v, int target_degree, const std::vector<Vertex>& avoid);

    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
    Graph graph() const;
    PlaneEmbedding embedding() const;

private:
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::vector<Vertex>> faces_;

    void insert_after(Vertex at, Vertex after, Vertex w);
};

/// Hub-and-rim wheel: rim 0..n-1, hub n.
GeneratedGraph make_wheel(int n);
/// Two hubs joined to a common rim cycle (a bipyramid); rim 0..n-1,
/// hubs n and n+1. Rim vertices have degree 4, hubs degree n.
GeneratedGraph make_double_wheel(int n);
GeneratedGraph make_icosahedron();

}  // namespace aec
