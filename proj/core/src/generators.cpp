#include "aec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace aec {

std::string to_string(Family f) {
    switch (f) {
        case Family::Cycle: return "cycle";
        case Family::Wheel: return "wheel";
        case Family::Grid: return "grid";
        case Family::Complete: return "complete";
        case Family::Prism: return "prism";
        case Family::Icosahedron: return "icosahedron";
        case Family::StackedTriangulation: return "stacked";
        case Family::Subdivided: return "subdivided";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (Family f : {Family::Cycle, Family::Wheel, Family::Grid, Family::Complete, Family::Prism,
                     Family::Icosahedron, Family::StackedTriangulation, Family::Subdivided})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

CorpusSpec make_subdivided(const CorpusSpec& base, int edges_to_subdivide) {
    CorpusSpec spec;
    spec.family = Family::Subdivided;
    spec.seed = base.seed;
    spec.params.push_back(edges_to_subdivide);
    spec.params.push_back(static_cast<int>(base.family));
    for (int p : base.params) spec.params.push_back(p);
    return spec;
}

namespace {

struct Point {
    double x, y;
};

// Rotation system of a straight-line drawing: neighbors in angular order.
PlaneEmbedding rotations_from_coordinates(const Graph& g, const std::vector<Point>& pts) {
    PlaneEmbedding emb;
    emb.rotation.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> nb;
        for (auto [w, e] : g.neighbors(v)) nb.push_back(w);
        std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) {
            double aa = std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x);
            double ab = std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
            if (aa != ab) return aa < ab;
            return a < b;
        });
        emb.rotation[v] = std::move(nb);
    }
    return emb;
}

GeneratedGraph make_cycle(int n) {
    if (n < 3) throw GraphError("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        double a = 2 * M_PI * i / n;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    Graph g = Graph::from_edge_list(n, edges);
    return {g, rotations_from_coordinates(g, pts), "cycle(" + std::to_string(n) + ")"};
}

GeneratedGraph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw GraphError("grid: need positive sides");
    auto id = [&](int i, int j) { return i * cols + j; };
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pts(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            pts[id(i, j)] = {double(j), double(i)};
            if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < rows) edges.push_back({id(i, j), id(i + 1, j)});
        }
    Graph g = Graph::from_edge_list(rows * cols, edges);
    return {g, rotations_from_coordinates(g, pts),
            "grid(" + std::to_string(rows) + "x" + std::to_string(cols) + ")"};
}

GeneratedGraph make_complete(int n) {
    if (n < 1) throw GraphError("complete: need n >= 1");
    if (n > 4) throw GraphError("complete: K_n is planar only for n <= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    Graph g = Graph::from_edge_list(n, edges);
    std::vector<Point> pts = {{0, 0}, {2, 0}, {1, 1.8}, {1, 0.6}};
    pts.resize(n);
    auto emb = n >= 1 ? std::optional(rotations_from_coordinates(g, pts)) : std::nullopt;
    return {g, emb, "complete(" + std::to_string(n) + ")"};
}

GeneratedGraph make_prism(int n) {
    if (n < 3) throw GraphError("prism: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pts(2 * n);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({n + i, n + (i + 1) % n});
        edges.push_back({i, n + i});
        double a = 2 * M_PI * i / n;
        pts[i] = {2 * std::cos(a), 2 * std::sin(a)};
        pts[n + i] = {std::cos(a), std::sin(a)};
    }
    Graph g = Graph::from_edge_list(2 * n, edges);
    return {g, rotations_from_coordinates(g, pts), "prism(" + std::to_string(n) + ")"};
}

GeneratedGraph stacked_triangulation(int n, std::uint32_t seed) {
    if (n < 4) throw GraphError("stacked: need n >= 4");
    PlanarBuilder b = PlanarBuilder::tetrahedron();
    std::mt19937 rng(seed);
    while (b.vertex_count() < n) {
        int f = static_cast<int>(rng() % b.faces().size());
        b.stack_into_face(f);
    }
    return {b.graph(), b.embedding(),
            "stacked(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")"};
}

GeneratedGraph subdivided(const CorpusSpec& spec) {
    if (spec.params.size() < 2) throw GraphError("subdivided: params = {e, base_family, ...}");
    int count = spec.params[0];
    CorpusSpec base;
    base.family = static_cast<Family>(spec.params[1]);
    base.params.assign(spec.params.begin() + 2, spec.params.end());
    base.seed = spec.seed;
    if (base.family == Family::Subdivided) throw GraphError("subdivided: cannot nest");
    GeneratedGraph gg = generate(base);
    if (count < 0 || count > gg.graph.edge_count())
        throw GraphError("subdivided: edge count out of range");

    std::mt19937 rng(spec.seed ^ 0x5bd1e995u);
    std::vector<EdgeId> ids(gg.graph.edge_count());
    for (EdgeId e = 0; e < gg.graph.edge_count(); ++e) ids[e] = e;
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng() % (ids.size() - i));
        std::swap(ids[i], ids[j]);
    }
    std::set<EdgeId> chosen(ids.begin(), ids.begin() + count);

    int n = gg.graph.vertex_count();
    std::vector<std::pair<int, int>> edges;
    PlaneEmbedding emb;
    if (gg.embedding) emb = *gg.embedding;
    for (EdgeId e = 0; e < gg.graph.edge_count(); ++e) {
        auto [u, v] = gg.graph.edge(e);
        if (!chosen.count(e)) {
            edges.push_back({u, v});
            continue;
        }
        int w = n++;
        edges.push_back({u, w});
        edges.push_back({w, v});
        if (gg.embedding) {
            std::replace(emb.rotation[u].begin(), emb.rotation[u].end(), v, w);
            std::replace(emb.rotation[v].begin(), emb.rotation[v].end(), u, w);
            emb.rotation.push_back({u, v});
        }
    }
    Graph g = Graph::from_edge_list(n, edges);
    std::optional<PlaneEmbedding> out_emb;
    if (gg.embedding) out_emb = emb;
    return {g, out_emb,
            "subdivided(" + std::to_string(count) + "," + gg.name + ")"};
}

}  // namespace

GeneratedGraph make_wheel(int n) {
    if (n < 3) throw GraphError("wheel: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    std::vector<Point> pts(n + 1);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({i, n});
        double a = 2 * M_PI * i / n;
        pts[i] = {std::cos(a), std::sin(a)};
    }
    pts[n] = {0, 0};
    Graph g = Graph::from_edge_list(n + 1, edges);
    return {g, rotations_from_coordinates(g, pts), "wheel(" + std::to_string(n) + ")"};
}

GeneratedGraph make_double_wheel(int n) {
    if (n < 3) throw GraphError("double_wheel: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({i, n});
        edges.push_back({i, n + 1});
    }
    Graph g = Graph::from_edge_list(n + 2, edges);
    // Hub n inside the rim polygon, hub n+1 drawn in the outer face: encode
    // the rotations directly.
    PlaneEmbedding emb;
    emb.rotation.resize(n + 2);
    for (int i = 0; i < n; ++i)
        emb.rotation[i] = {(i + 1) % n, n, (i + n - 1) % n, n + 1};
    for (int i = 0; i < n; ++i) emb.rotation[n].push_back(i);
    for (int i = n - 1; i >= 0; --i) emb.rotation[n + 1].push_back(i);
    return {g, emb, "double_wheel(" + std::to_string(n) + ")"};
}

GeneratedGraph make_icosahedron() {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    std::vector<std::array<double, 3>> p3;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            p3.push_back({0, s1, s2 * phi});
            p3.push_back({s1, s2 * phi, 0});
            p3.push_back({s2 * phi, 0, s1});
        }
    const int n = 12;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d2 = 0;
            for (int k = 0; k < 3; ++k) d2 += (p3[i][k] - p3[j][k]) * (p3[i][k] - p3[j][k]);
            if (d2 < 4.5) edges.push_back({i, j});  // edge length 2
        }
    Graph g = Graph::from_edge_list(n, edges);

    // Generic rotation then stereographic projection; conformality preserves
    // the angular order of neighbors.
    double ax = 0.31, ay = 0.27;
    std::vector<Point> pts(n);
    double radius = std::sqrt(1 + phi * phi);
    for (int i = 0; i < n; ++i) {
        auto [x, y, z] = p3[i];
        double y1 = y * std::cos(ax) - z * std::sin(ax);
        double z1 = y * std::sin(ax) + z * std::cos(ax);
        double x2 = x * std::cos(ay) + z1 * std::sin(ay);
        double z2 = -x * std::sin(ay) + z1 * std::cos(ay);
        pts[i] = {x2 / (radius * 1.0001 - z2), y1 / (radius * 1.0001 - z2)};
    }
    return {g, rotations_from_coordinates(g, pts), "icosahedron"};
}

PlanarBuilder PlanarBuilder::from(const Graph& g, const PlaneEmbedding& emb) {
    PlanarBuilder b;
    b.rot_ = emb.rotation;
    for (const Face& f : enumerate_faces(g, emb)) {
        std::vector<Vertex> walk;
        for (auto [u, v] : f.walk) walk.push_back(u);
        if (!walk.empty()) b.faces_.push_back(std::move(walk));
    }
    return b;
}

PlanarBuilder PlanarBuilder::tetrahedron() {
    GeneratedGraph k4 = make_complete(4);
    return from(k4.graph, *k4.embedding);
}

void PlanarBuilder::insert_after(Vertex at, Vertex after, Vertex w) {
    auto& r = rot_[at];
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) throw GraphError("builder: rotation insert anchor missing");
    r.insert(it + 1, w);
}

Vertex PlanarBuilder::stack_into_face(int face_index) {
    auto face = faces_[face_index];
    if (face.size() != 3) throw GraphError("builder: stacking needs a triangular face");
    Vertex a = face[0], b = face[1], c = face[2];
    Vertex w = static_cast<Vertex>(rot_.size());
    rot_.push_back({a, c, b});
    insert_after(a, c, w);  // corner at a: between c and b
    insert_after(b, a, w);
    insert_after(c, b, w);
    faces_[face_index] = {a, b, w};
    faces_.push_back({b, c, w});
    faces_.push_back({c, a, w});
    return w;
}

Vertex PlanarBuilder::attach_two_vertex(int face_index, int edge_pos) {
    auto face = faces_[face_index];
    int d = static_cast<int>(face.size());
    Vertex a = face[edge_pos];
    Vertex b = face[(edge_pos + 1) % d];
    Vertex x = face[(edge_pos + d - 1) % d];  // predecessor of a on the walk
    Vertex w = static_cast<Vertex>(rot_.size());
    rot_.push_back({a, b});
    if (d == 1 || x == b) {
        // degenerate walks not supported
        if (d < 3) throw GraphError("builder: face too small for attachment");
    }
    insert_after(a, x, w);
    insert_after(b, a, w);
    std::vector<Vertex> replaced;
    for (int i = 0; i < d; ++i) {
        replaced.push_back(face[i]);
        if (i == edge_pos) replaced.push_back(w);
    }
    faces_[face_index] = std::move(replaced);
    faces_.push_back({a, b, w});
    return w;
}

Vertex PlanarBuilder::subdivide_edge(Vertex u, Vertex v) {
    Vertex w = static_cast<Vertex>(rot_.size());
    rot_.push_back({u, v});
    std::replace(rot_[u].begin(), rot_[u].end(), v, w);
    std::replace(rot_[v].begin(), rot_[v].end(), u, w);
    for (auto& face : faces_) {
        std::vector<Vertex> out;
        int d = static_cast<int>(face.size());
        for (int i = 0; i < d; ++i) {
            out.push_back(face[i]);
            Vertex nxt = face[(i + 1) % d];
            if ((face[i] == u && nxt == v) || (face[i] == v && nxt == u)) out.push_back(w);
        }
        face = std::move(out);
    }
    return w;
}

bool PlanarBuilder::boost_degree(Vertex v, int target_degree, const std::vector<Vertex>& avoid) {
    while (degree(v) < target_degree) {
        bool done = false;
        for (size_t f = 0; f < faces_.size() && !done; ++f) {
            if (faces_[f].size() != 3) continue;
            const auto& face = faces_[f];
            if (std::find(face.begin(), face.end(), v) == face.end()) continue;
            bool ok = true;
            for (Vertex x : face)
                ok = ok && (x == v || std::find(avoid.begin(), avoid.end(), x) == avoid.end());
            if (!ok) continue;
            stack_into_face(static_cast<int>(f));
            done = true;
        }
        if (!done) return false;
    }
    return true;
}

Graph PlanarBuilder::graph() const {
    std::vector<std::pair<int, int>> edges;
    for (Vertex v = 0; v < vertex_count(); ++v)
        for (Vertex w : rot_[v])
            if (v < w) edges.push_back({v, w});
    return Graph::from_edge_list(vertex_count(), edges);
}

PlaneEmbedding PlanarBuilder::embedding() const { return PlaneEmbedding{rot_}; }

GeneratedGraph generate(const CorpusSpec& spec) {
    auto need = [&](size_t k) {
        if (spec.params.size() < k)
            throw GraphError(to_string(spec.family) + ": expected " + std::to_string(k) +
                             " parameter(s)");
    };
    switch (spec.family) {
        case Family::Cycle: need(1); return make_cycle(spec.params[0]);
        case Family::Wheel: need(1); return make_wheel(spec.params[0]);
        case Family::Grid: need(2); return make_grid(spec.params[0], spec.params[1]);
        case Family::Complete: need(1); return make_complete(spec.params[0]);
        case Family::Prism: need(1); return make_prism(spec.params[0]);
        case Family::Icosahedron: return make_icosahedron();
        case Family::StackedTriangulation: need(1); return stacked_triangulation(spec.params[0], spec.seed);
        case Family::Subdivided: return subdivided(spec);
    }
    throw GraphError("unknown family");
}

}  // namespace aec
