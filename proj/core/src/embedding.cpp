#include "aec/embedding.hpp"

#include <algorithm>
#include <map>

namespace aec {

Vertex PlaneEmbedding::successor(Vertex at, Vertex from) const {
    const auto& rot = rotation[at];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == from) return rot[(i + 1) % rot.size()];
    throw EmbeddingError("vertex " + std::to_string(from) + " not in rotation of " +
                         std::to_string(at));
}

void validate_embedding(const Graph& g, const PlaneEmbedding& emb) {
    if (static_cast<int>(emb.rotation.size()) != g.vertex_count())
        throw EmbeddingError("rotation count differs from vertex count");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> a = emb.rotation[v];
        std::vector<Vertex> b;
        for (auto [w, e] : g.neighbors(v)) b.push_back(w);
        std::sort(a.begin(), a.end());
        if (a != b)
            throw EmbeddingError("rotation of vertex " + std::to_string(v) +
                                 " is not a permutation of its neighbors");
    }
}

std::vector<Face> enumerate_faces(const Graph& g, const PlaneEmbedding& emb) {
    validate_embedding(g, emb);
    const int n = g.vertex_count();

    std::vector<Face> faces;
    // Directed edge-end (v, index of neighbor in rotation of v) -> visited.
    std::vector<std::vector<char>> used(n);
    std::vector<std::map<Vertex, int>> pos(n);
    for (Vertex v = 0; v < n; ++v) {
        used[v].assign(emb.rotation[v].size(), 0);
        for (size_t i = 0; i < emb.rotation[v].size(); ++i)
            pos[v][emb.rotation[v][i]] = static_cast<int>(i);
    }
    // Faces traced per vertex component for the Euler audit.
    std::vector<int> face_count_of_component;
    auto comps = g.connected_components();
    std::vector<int> comp_of(n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
    face_count_of_component.assign(comps.size(), 0);

    for (Vertex s = 0; s < n; ++s) {
        if (emb.rotation[s].empty()) {
            faces.push_back(Face{});  // isolated vertex: one face, degree 0
            face_count_of_component[comp_of[s]]++;
            continue;
        }
        for (size_t i0 = 0; i0 < emb.rotation[s].size(); ++i0) {
            if (used[s][i0]) continue;
            Face f;
            Vertex u = s;
            int idx = static_cast<int>(i0);
            while (!used[u][idx]) {
                used[u][idx] = 1;
                Vertex v = emb.rotation[u][idx];
                f.walk.push_back({u, v});
                int at = pos[v].at(u);
                idx = (at + 1) % static_cast<int>(emb.rotation[v].size());
                u = v;
            }
            face_count_of_component[comp_of[s]]++;
            faces.push_back(std::move(f));
        }
    }

    for (size_t c = 0; c < comps.size(); ++c) {
        int V = static_cast<int>(comps[c].size());
        int E = 0;
        for (Vertex v : comps[c]) E += g.degree(v);
        E /= 2;
        int F = face_count_of_component[c];
        if (V - E + F != 2)
            throw EmbeddingError("embedding is not plane: component containing vertex " +
                                 std::to_string(comps[c].front()) + " has V-E+F = " +
                                 std::to_string(V - E + F));
    }
    return faces;
}

PlaneEmbedding induced_embedding(const Graph& host, const PlaneEmbedding& emb,
                                 const std::vector<Vertex>& to_original) {
    std::vector<int> local(emb.rotation.size(), -1);
    for (size_t i = 0; i < to_original.size(); ++i) local[to_original[i]] = static_cast<int>(i);
    PlaneEmbedding out;
    out.rotation.resize(to_original.size());
    for (size_t i = 0; i < to_original.size(); ++i) {
        for (Vertex w : emb.rotation[to_original[i]])
            if (local[w] >= 0) out.rotation[i].push_back(local[w]);
    }
    (void)host;
    return out;
}

}  // namespace aec
