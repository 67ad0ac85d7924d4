#include "aec/configuration.hpp"

#include <algorithm>

namespace aec {

std::string to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::A1: return "A1";
        case ConfigKind::A2_1: return "A2.1";
        case ConfigKind::A2_2: return "A2.2";
        case ConfigKind::A3_1: return "A3.1";
        case ConfigKind::A3_2: return "A3.2";
        case ConfigKind::A3_3: return "A3.3";
        case ConfigKind::A4_1: return "A4.1";
        case ConfigKind::A4_2: return "A4.2";
    }
    return "?";
}

std::optional<ConfigKind> config_kind_from_string(const std::string& s) {
    for (ConfigKind k : {ConfigKind::A1, ConfigKind::A2_1, ConfigKind::A2_2, ConfigKind::A3_1,
                         ConfigKind::A3_2, ConfigKind::A3_3, ConfigKind::A4_1, ConfigKind::A4_2})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

namespace {

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.vertex_count(); }

// Neighbors sorted by decreasing degree, ties by increasing id.
std::vector<Vertex> neighbors_by_degree_desc(const Graph& g, Vertex u) {
    std::vector<Vertex> nb;
    for (auto [w, e] : g.neighbors(u)) nb.push_back(w);
    std::stable_sort(nb.begin(), nb.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return nb;
}

std::vector<Vertex> neighbors_by_degree_asc(const Graph& g, Vertex u) {
    std::vector<Vertex> nb;
    for (auto [w, e] : g.neighbors(u)) nb.push_back(w);
    std::stable_sort(nb.begin(), nb.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    return nb;
}

bool a2_outer(const Graph& g, Vertex u) {
    return g.neighbors_with_degree(u, 2) >= 1 &&
           g.neighbors_with_degree_at_most(u, 8) >= g.degree(u) - 8;
}

bool valid_a2_witness(const Graph& g, const Configuration& cfg) {
    Vertex u = cfg.u, v = cfg.v, w = cfg.w;
    if (!in_range(g, u) || !in_range(g, v) || !in_range(g, w)) return false;
    if (!g.adjacent(u, v) || g.degree(v) != 2 || !g.adjacent(v, w) || w == u) return false;
    if (!a2_outer(g, u)) return false;
    // neighbors = u_1..u_{d(u)-1}, non-increasing degree, all adjacent to u,
    // v excluded and of minimum degree.
    if (static_cast<int>(cfg.neighbors.size()) != g.degree(u) - 1) return false;
    std::vector<Vertex> seen = cfg.neighbors;
    seen.push_back(v);
    std::sort(seen.begin(), seen.end());
    std::vector<Vertex> nb;
    for (auto [x, e] : g.neighbors(u)) nb.push_back(x);
    if (seen != nb) return false;
    for (size_t i = 0; i + 1 < cfg.neighbors.size(); ++i)
        if (g.degree(cfg.neighbors[i]) < g.degree(cfg.neighbors[i + 1])) return false;
    if (!cfg.neighbors.empty() && g.degree(cfg.neighbors.back()) < 2) return false;
    return true;
}

bool valid_a4_witness(const Graph& g, const Configuration& cfg) {
    Vertex v = cfg.v, u = cfg.u;
    if (!in_range(g, u) || !in_range(g, v) || !g.adjacent(u, v)) return false;
    if (static_cast<int>(cfg.neighbors.size()) != g.degree(v) - 1) return false;
    std::vector<Vertex> seen = cfg.neighbors;
    seen.push_back(u);
    std::sort(seen.begin(), seen.end());
    std::vector<Vertex> nb;
    for (auto [x, e] : g.neighbors(v)) nb.push_back(x);
    if (seen != nb) return false;
    // d(u) <= d(v_2) <= ... <= d(v_{d(v)})
    if (!cfg.neighbors.empty() && g.degree(u) > g.degree(cfg.neighbors.front())) return false;
    for (size_t i = 0; i + 1 < cfg.neighbors.size(); ++i)
        if (g.degree(cfg.neighbors[i]) > g.degree(cfg.neighbors[i + 1])) return false;
    return true;
}

}  // namespace

bool check_configuration(const Graph& g, const Configuration& cfg) {
    switch (cfg.kind) {
        case ConfigKind::A1: {
            Vertex u = cfg.u, v = cfg.v, w = cfg.w;
            if (!in_range(g, u) || !in_range(g, v) || !in_range(g, w)) return false;
            if (u == w) return false;
            return g.degree(v) == 2 && g.adjacent(u, v) && g.adjacent(v, w) && g.degree(u) <= 9;
        }
        case ConfigKind::A2_1: {
            if (!valid_a2_witness(g, cfg)) return false;
            return g.neighbors_with_degree_at_most(cfg.u, 8) >= g.degree(cfg.u) - 7;
        }
        case ConfigKind::A2_2: {
            if (!valid_a2_witness(g, cfg)) return false;
            Vertex u = cfg.u;
            return g.neighbors_with_degree_at_most(u, 8) == g.degree(u) - 8 &&
                   g.neighbors_with_degree(u, 2) >= g.degree(u) - 9;
        }
        case ConfigKind::A3_1:
        case ConfigKind::A3_2:
        case ConfigKind::A3_3: {
            Vertex u = cfg.u, v = cfg.v;
            if (!in_range(g, u) || !in_range(g, v)) return false;
            if (g.degree(u) != 3 || !g.adjacent(u, v)) return false;
            if (cfg.neighbors.size() != 2) return false;
            Vertex u1 = cfg.neighbors[0], u2 = cfg.neighbors[1];
            if (u1 == u2 || u1 == v || u2 == v) return false;
            if (!g.adjacent(u, u1) || !g.adjacent(u, u2)) return false;
            if (cfg.kind == ConfigKind::A3_1) return g.degree(v) <= 8;
            if (cfg.kind == ConfigKind::A3_2) return g.degree(v) == 9 && g.adjacent(v, u2);
            return g.degree(v) == 10 && g.neighbors_with_degree_at_most(v, 5) >= 5 &&
                   g.adjacent(v, u1) && g.adjacent(v, u2);
        }
        case ConfigKind::A4_1: {
            if (!valid_a4_witness(g, cfg)) return false;
            Vertex u = cfg.u, v = cfg.v;
            if (g.degree(v) != 4) return false;
            int du = g.degree(u);
            return du >= 4 && du <= 7 && du + g.degree(cfg.neighbors[0]) <= 17;
        }
        case ConfigKind::A4_2: {
            if (!valid_a4_witness(g, cfg)) return false;
            Vertex u = cfg.u, v = cfg.v;
            if (g.degree(v) != 5) return false;
            int du = g.degree(u);
            if (du < 4 || du > 6) return false;
            int d2 = g.degree(cfg.neighbors[0]);
            int d3 = g.degree(cfg.neighbors[1]);
            if (cfg.disjunct == 1) return du + d2 + d3 <= 18;
            // second disjunct: d(u)=d(v_2)=6, d(v_i)=7 for i=3,4,5, uv_5 in E
            if (du != 6 || d2 != 6) return false;
            for (int i = 1; i < 4; ++i)
                if (g.degree(cfg.neighbors[i]) != 7) return false;
            return g.adjacent(u, cfg.neighbors[3]);
        }
    }
    return false;
}

std::optional<Configuration> find_configuration(const Graph& g) {
    const int n = g.vertex_count();

    // A1: a path u-v-w with d(v)=2 and d(u)<=9.
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        Vertex a = g.neighbors(v)[0].first;
        Vertex b = g.neighbors(v)[1].first;
        for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
            if (g.degree(u) <= 9) {
                Configuration cfg;
                cfg.kind = ConfigKind::A1;
                cfg.u = u;
                cfg.v = v;
                cfg.w = w;
                cfg.removal_edge = {u, v};
                return cfg;
            }
        }
    }

    // A2.1 / A2.2 share the outer guard and witness shape.
    auto make_a2 = [&](Vertex u, ConfigKind kind) {
        Configuration cfg;
        cfg.kind = kind;
        cfg.u = u;
        std::vector<Vertex> nb = neighbors_by_degree_desc(g, u);
        cfg.v = nb.back();  // a 2-vertex: minimum degree is 2 under the guard
        nb.pop_back();
        cfg.neighbors = std::move(nb);
        for (auto [x, e] : g.neighbors(cfg.v))
            if (x != u) cfg.w = x;
        cfg.removal_edge = {u, cfg.v};
        return cfg;
    };
    for (ConfigKind kind : {ConfigKind::A2_1, ConfigKind::A2_2}) {
        for (Vertex u = 0; u < n; ++u) {
            if (!a2_outer(g, u)) continue;
            int small = g.neighbors_with_degree_at_most(u, 8);
            if (kind == ConfigKind::A2_1 && small < g.degree(u) - 7) continue;
            if (kind == ConfigKind::A2_2 &&
                (small != g.degree(u) - 8 || g.neighbors_with_degree(u, 2) < g.degree(u) - 9))
                continue;
            return make_a2(u, kind);
        }
    }

    // A3.x: a 3-vertex u adjacent to v.
    for (ConfigKind kind : {ConfigKind::A3_1, ConfigKind::A3_2, ConfigKind::A3_3}) {
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) != 3) continue;
            for (auto [v, ev] : g.neighbors(u)) {
                std::vector<Vertex> others;
                for (auto [x, e] : g.neighbors(u))
                    if (x != v) others.push_back(x);
                Configuration cfg;
                cfg.kind = kind;
                cfg.u = u;
                cfg.v = v;
                cfg.removal_edge = {u, v};
                if (kind == ConfigKind::A3_1) {
                    if (g.degree(v) > 8) continue;
                    cfg.neighbors = others;
                    return cfg;
                }
                if (kind == ConfigKind::A3_2) {
                    if (g.degree(v) != 9) continue;
                    // u_2 is a common neighbor of u and v.
                    for (int pick : {0, 1}) {
                        if (g.adjacent(v, others[pick])) {
                            cfg.neighbors = {others[1 - pick], others[pick]};
                            return cfg;
                        }
                    }
                    continue;
                }
                if (g.degree(v) != 10 || g.neighbors_with_degree_at_most(v, 5) < 5) continue;
                if (g.adjacent(v, others[0]) && g.adjacent(v, others[1])) {
                    cfg.neighbors = others;
                    return cfg;
                }
            }
        }
    }

    // A4.x: scan on the center v.
    for (ConfigKind kind : {ConfigKind::A4_1, ConfigKind::A4_2}) {
        for (Vertex v = 0; v < n; ++v) {
            int dv = g.degree(v);
            if (kind == ConfigKind::A4_1 ? dv != 4 : dv != 5) continue;
            std::vector<Vertex> nb = neighbors_by_degree_asc(g, v);
            Vertex u = nb.front();
            int du = g.degree(u);
            Configuration cfg;
            cfg.kind = kind;
            cfg.u = u;
            cfg.v = v;
            cfg.neighbors.assign(nb.begin() + 1, nb.end());
            cfg.removal_edge = {u, v};
            if (kind == ConfigKind::A4_1) {
                if (du >= 4 && du <= 7 && du + g.degree(cfg.neighbors[0]) <= 17) return cfg;
                continue;
            }
            if (du < 4 || du > 6) continue;
            int d2 = g.degree(cfg.neighbors[0]);
            int d3 = g.degree(cfg.neighbors[1]);
            if (du + d2 + d3 <= 18) {
                cfg.disjunct = 1;
                return cfg;
            }
            if (du == 6 && d2 == 6 && g.degree(cfg.neighbors[1]) == 7 &&
                g.degree(cfg.neighbors[2]) == 7 && g.degree(cfg.neighbors[3]) == 7) {
                // need some degree-7 neighbor adjacent to u placed last
                for (int i = 3; i >= 1; --i) {
                    if (g.adjacent(u, cfg.neighbors[i])) {
                        std::swap(cfg.neighbors[i], cfg.neighbors[3]);
                        std::sort(cfg.neighbors.begin() + 1, cfg.neighbors.begin() + 3);
                        cfg.disjunct = 2;
                        return cfg;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace aec
