#include "aec/coloring.hpp"

#include <algorithm>
#include <map>

namespace aec {

int EdgeColoring::colored_count() const {
    int c = 0;
    for (int x : color_) c += x != kUncolored;
    return c;
}

std::vector<int> colors_at(const Graph& g, const EdgeColoring& c, Vertex v) {
    std::vector<int> out;
    for (auto [w, e] : g.neighbors(v))
        if (c.colored(e)) out.push_back(c.color(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<EdgeId> edge_of_color_at(const Graph& g, const EdgeColoring& c, Vertex v, int col) {
    std::optional<EdgeId> found;
    for (auto [w, e] : g.neighbors(v)) {
        if (c.color(e) == col) {
            if (found)
                throw GraphError("improper coloring: color " + std::to_string(col) +
                                 " twice at vertex " + std::to_string(v));
            found = e;
        }
    }
    return found;
}

std::optional<PropernessViolation> find_properness_violation(const Graph& g,
                                                             const EdgeColoring& c) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::map<int, EdgeId> first;
        for (auto [w, e] : g.neighbors(v)) {
            if (!c.colored(e)) continue;
            auto [it, fresh] = first.insert({c.color(e), e});
            if (!fresh) return PropernessViolation{v, it->second, e};
        }
    }
    return std::nullopt;
}

namespace {

// Per-pair slots for the {i,j}-subgraph, stamped to avoid reallocation.
struct PairSlots {
    std::vector<int> stamp;
    std::vector<EdgeId> slot_i, slot_j;
    int cur = 0;

    explicit PairSlots(int n) : stamp(n, -1), slot_i(n, -1), slot_j(n, -1) {}

    void fresh() { ++cur; }
    void put(Vertex v, bool is_i, EdgeId e) {
        if (stamp[v] != cur) {
            stamp[v] = cur;
            slot_i[v] = slot_j[v] = -1;
        }
        (is_i ? slot_i[v] : slot_j[v]) = e;
    }
    EdgeId get(Vertex v, bool want_i) const {
        if (stamp[v] != cur) return -1;
        return want_i ? slot_i[v] : slot_j[v];
    }
};

std::optional<BichromaticCycle> scan_pair(const Graph& g, const EdgeColoring& c, int i, int j,
                                          PairSlots& slots,
                                          const std::vector<EdgeId>& edges_i,
                                          const std::vector<EdgeId>& edges_j) {
    slots.fresh();
    std::vector<Vertex> touched;
    for (EdgeId e : edges_i) {
        slots.put(g.edge(e).u, true, e);
        slots.put(g.edge(e).v, true, e);
        touched.push_back(g.edge(e).u);
        touched.push_back(g.edge(e).v);
    }
    for (EdgeId e : edges_j) {
        slots.put(g.edge(e).u, false, e);
        slots.put(g.edge(e).v, false, e);
        touched.push_back(g.edge(e).u);
        touched.push_back(g.edge(e).v);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    // A component of the {i,j}-subgraph is a cycle iff the walk from any of
    // its vertices returns to the start. Scan ascending so the first cycle
    // found starts at its lowest vertex.
    std::map<Vertex, char> visited;
    for (Vertex s : touched) {
        if (visited.count(s)) continue;
        if (slots.get(s, true) < 0 || slots.get(s, false) < 0) {
            // Chain end or isolated-in-pair vertex: walk and mark.
            bool start_i = slots.get(s, true) >= 0;
            Vertex cur = s;
            bool want = start_i;
            visited[cur] = 1;
            while (true) {
                EdgeId e = slots.get(cur, want);
                if (e < 0) break;
                cur = g.edge(e).other(cur);
                visited[cur] = 1;
                want = !want;
            }
            continue;
        }
        // Both slots present: possibly on a cycle. Walk via color i first.
        std::vector<Vertex> walk{s};
        Vertex cur = s;
        bool want = true;
        while (true) {
            EdgeId e = slots.get(cur, want);
            if (e < 0) break;
            cur = g.edge(e).other(cur);
            if (cur == s) {
                BichromaticCycle cyc;
                cyc.vertices = walk;
                cyc.color_i = i;
                cyc.color_j = j;
                return cyc;
            }
            walk.push_back(cur);
            want = !want;
        }
        for (Vertex v : walk) visited[v] = 1;
        // Walk the other direction to mark the rest of the chain.
        cur = s;
        want = false;
        while (true) {
            EdgeId e = slots.get(cur, want);
            if (e < 0) break;
            cur = g.edge(e).other(cur);
            visited[cur] = 1;
            want = !want;
        }
    }
    return std::nullopt;
}

std::optional<BichromaticCycle> cycle_scan(const Graph& g, const EdgeColoring& c) {
    std::map<int, std::vector<EdgeId>> by_color;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (c.colored(e)) by_color[c.color(e)].push_back(e);

    PairSlots slots(g.vertex_count());
    for (auto it = by_color.begin(); it != by_color.end(); ++it) {
        auto jt = it;
        for (++jt; jt != by_color.end(); ++jt) {
            auto cyc = scan_pair(g, c, it->first, jt->first, slots, it->second, jt->second);
            if (cyc) return cyc;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<BichromaticCycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c) {
    if (auto viol = find_properness_violation(g, c))
        throw GraphError("find_bichromatic_cycle: improper coloring at vertex " +
                         std::to_string(viol->at));
    return cycle_scan(g, c);
}

bool exists_bichromatic_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, int i,
                             int j, std::vector<Vertex>* witness) {
    if (i == j) throw GraphError("exists_bichromatic_path: colors must differ");
    if (u == v) return false;
    for (int first : {i, j}) {
        int second = first == i ? j : i;
        std::vector<Vertex> path{u};
        Vertex cur = u;
        int want = first;
        long steps = 0;
        while (true) {
            auto e = edge_of_color_at(g, c, cur, want);
            if (!e) break;
            cur = g.edge(*e).other(cur);
            path.push_back(cur);
            if (cur == v) {
                if (witness) *witness = path;
                return true;
            }
            if (cur == u) break;  // closed a cycle through u without meeting v
            want = want == i ? j : i;
            if (++steps > 2L * g.edge_count()) break;
        }
        (void)second;
    }
    return false;
}

bool bichromatic_cycle_through(const Graph& g, const EdgeColoring& c, EdgeId e, int other) {
    int a = c.color(e);
    if (a == kUncolored || other == a) throw GraphError("bichromatic_cycle_through: bad colors");
    Vertex start = g.edge(e).u;
    Vertex cur = g.edge(e).v;
    int want = other;
    long steps = 0;
    while (true) {
        auto nxt = edge_of_color_at(g, c, cur, want);
        if (!nxt) return false;
        cur = g.edge(*nxt).other(cur);
        if (cur == start) return true;
        want = want == a ? other : a;
        if (++steps > 2L * g.edge_count()) return false;
    }
}

std::string VerifyResult::describe() const {
    if (accepted) return "accepted";
    switch (reason) {
        case RejectReason::Incomplete:
            return "rejected: incomplete (edge " +
                   (offending_edge ? std::to_string(*offending_edge) : std::string("?")) +
                   " uncolored)";
        case RejectReason::Palette:
            return "rejected: color out of palette on edge " +
                   (offending_edge ? std::to_string(*offending_edge) : std::string("?"));
        case RejectReason::Improper:
            return violation ? "rejected: improper at vertex " + std::to_string(violation->at)
                             : "rejected: improper";
        case RejectReason::Cycle: {
            std::string s = "rejected: bichromatic cycle";
            if (cycle) {
                s += " colors (" + std::to_string(cycle->color_i) + "," +
                     std::to_string(cycle->color_j) + ") through";
                for (Vertex v : cycle->vertices) s += " " + std::to_string(v);
            }
            return s;
        }
    }
    return "?";
}

static VerifyResult verify_impl(const Graph& g, const EdgeColoring& c, int k,
                                const std::vector<char>* active) {
    VerifyResult r;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (active && !(*active)[e]) continue;
        if (!c.colored(e)) {
            r.reason = RejectReason::Incomplete;
            r.offending_edge = e;
            return r;
        }
        if (c.color(e) < 1 || c.color(e) > k) {
            r.reason = RejectReason::Palette;
            r.offending_edge = e;
            return r;
        }
    }
    if (auto viol = find_properness_violation(g, c)) {
        r.reason = RejectReason::Improper;
        r.violation = viol;
        return r;
    }
    if (auto cyc = cycle_scan(g, c)) {
        r.reason = RejectReason::Cycle;
        r.cycle = cyc;
        return r;
    }
    r.accepted = true;
    return r;
}

VerifyResult verify_acyclic(const Graph& g, const EdgeColoring& c, int k) {
    return verify_impl(g, c, k, nullptr);
}

VerifyResult verify_acyclic_masked(const Graph& g, const EdgeColoring& c, int k,
                                   const std::vector<char>& active) {
    bool stray = false;
    for (EdgeId e = 0; e < g.edge_count() && !stray; ++e)
        stray = !active[e] && c.colored(e);
    if (!stray) return verify_impl(g, c, k, &active);
    EdgeColoring masked = c;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!active[e]) masked.unset(e);
    return verify_impl(g, masked, k, &active);
}

}  // namespace aec
