#include <algorithm>
#include <set>

#include "aec/colorize.hpp"

// The per-configuration extension logic. Each handler mirrors one branch
// cascade: cheap guards (color-set membership, alternating-path existence)
// select a candidate move, every candidate is gated locally and each
// completed extension is gated by the full acyclicity check before it is
// accepted. Exhausting a cascade raises BranchMismatchError and the caller
// runs the bounded fallback search.
//
// All moves are expressed over actual color sets; the literal color numbers
// of the source analysis are relabelings.

namespace aec {

namespace {

using Recolor = std::pair<EdgeId, int>;

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    for (int x : b) a.push_back(x);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

class Session {
public:
    Session(ColorizerState& st, const Configuration& cfg, EdgeId uv)
        : st_(st), g_(*st.graph), cfg_(cfg), uv_(uv), entry_(st.coloring) {
        u_ = g_.edge(uv).u == cfg.removal_edge.first ? cfg.removal_edge.first
                                                     : cfg.removal_edge.first;
        u_ = cfg.removal_edge.first;
        v_ = cfg.removal_edge.second;
    }

    const Graph& g() const { return g_; }
    Vertex u() const { return u_; }
    Vertex v() const { return v_; }
    EdgeId uv() const { return uv_; }
    int palette() const { return st_.palette_size; }

    int deg(Vertex x) const {
        if (st_.active.empty()) return g_.degree(x);
        int d = 0;
        for (auto [w, e] : g_.neighbors(x)) d += st_.active[e];
        return d;
    }

    int color(EdgeId e) const { return st_.coloring.color(e); }

    EdgeId edge_between(Vertex a, Vertex b) const {
        auto e = g_.edge_between(a, b);
        if (!e) throw BranchMismatchError("expected edge absent");
        return *e;
    }

    /// Colored active edge of the given color at x, or -1.
    EdgeId edge_of_color(Vertex x, int c) const {
        for (auto [w, e] : g_.neighbors(x))
            if (st_.edge_active(e) && st_.coloring.color(e) == c) return e;
        return -1;
    }

    Vertex endpoint_of_color(Vertex x, int c) const {
        EdgeId e = edge_of_color(x, c);
        if (e < 0) throw BranchMismatchError("expected colored edge absent");
        return g_.edge(e).other(x);
    }

    std::vector<int> C(Vertex x) const { return colors_at(g_, st_.coloring, x); }

    std::vector<int> free_colors() const {
        auto cu = C(u_);
        auto cv = C(v_);
        std::vector<int> out;
        for (int c = 1; c <= st_.palette_size; ++c)
            if (!contains(cu, c) && !contains(cv, c)) out.push_back(c);
        return out;
    }

    std::vector<int> shared() const {
        auto cu = C(u_);
        auto cv = C(v_);
        std::vector<int> out;
        for (int c : cu)
            if (contains(cv, c)) out.push_back(c);
        return out;
    }

    bool path(Vertex a, Vertex b, int i, int j) const {
        return exists_bichromatic_path(g_, st_.coloring, a, b, i, j);
    }

    /// Stages recolors permanently (reduction move). Gate: properness at the
    /// touched vertices plus no two-colored cycle through a changed edge.
    bool try_batch(const std::vector<Recolor>& recolors, const char* label) {
        size_t mark = undo_.size();
        stage(recolors);
        if (!gate_batch(recolors)) {
            unwind(mark);
            return false;
        }
        labels_.push_back(label);
        return true;
    }

    /// Stages recolors with a properness-only gate (used for color switches
    /// whose temporary cycles the cascade repairs before finishing).
    bool try_batch_proper_only(const std::vector<Recolor>& recolors, const char* label) {
        size_t mark = undo_.size();
        stage(recolors);
        for (auto [e, c] : recolors)
            if (!proper_at_edge(e)) {
                unwind(mark);
                return false;
            }
        labels_.push_back(label);
        return true;
    }

    /// Terminal move: recolors, then colors uv. Accepted only if the full
    /// verifier accepts; otherwise the whole move is undone.
    bool try_finish(const std::vector<Recolor>& recolors, int uv_color, const char* label) {
        size_t mark = undo_.size();
        stage(recolors);
        if (!gate_batch(recolors)) {
            unwind(mark);
            return false;
        }
        set(uv_, uv_color);
        if (!proper_at_edge(uv_) || !st_.verify().accepted) {
            unwind(mark);
            return false;
        }
        labels_.push_back(label);
        commit();
        return true;
    }

    bool direct() {
        auto sh = shared();
        for (int j : free_colors()) {
            bool blocked = false;
            for (int i : sh)
                if (path(u_, v_, i, j)) {
                    blocked = true;
                    break;
                }
            if (!blocked && try_finish({}, j, "direct")) return true;
        }
        return false;
    }

    bool finish_with_any(const std::vector<Recolor>& recolors, const std::vector<int>& candidates,
                         const char* label) {
        for (int c : candidates)
            if (try_finish(recolors, c, label)) return true;
        return false;
    }

    void restore_entry() {
        st_.coloring = entry_;
        undo_.clear();
        ops_.clear();
        labels_.clear();
    }

    bool finished() const { return finished_; }

private:
    void set(EdgeId e, int c) {
        undo_.push_back({e, st_.coloring.color(e)});
        ops_.push_back({e, st_.coloring.color(e), c});
        if (c == kUncolored)
            st_.coloring.unset(e);
        else
            st_.coloring.set(e, c);
    }

    void stage(const std::vector<Recolor>& recolors) {
        for (auto [e, c] : recolors) set(e, c);
    }

    void unwind(size_t mark) {
        while (undo_.size() > mark) {
            auto [e, c] = undo_.back();
            undo_.pop_back();
            ops_.pop_back();
            if (c == kUncolored)
                st_.coloring.unset(e);
            else
                st_.coloring.set(e, c);
        }
    }

    bool proper_at_edge(EdgeId e) const {
        int c = st_.coloring.color(e);
        if (c == kUncolored) return true;
        for (Vertex end : {g_.edge(e).u, g_.edge(e).v})
            for (auto [w, f] : g_.neighbors(end))
                if (f != e && st_.edge_active(f) && st_.coloring.color(f) == c) return false;
        return true;
    }

    bool gate_batch(const std::vector<Recolor>& recolors) {
        for (auto [e, c] : recolors)
            if (!proper_at_edge(e)) return false;
        for (auto [e, c] : recolors) {
            if (st_.coloring.color(e) == kUncolored) continue;
            for (Vertex end : {g_.edge(e).u, g_.edge(e).v})
                for (int b : C(end)) {
                    if (b == st_.coloring.color(e)) continue;
                    if (bichromatic_cycle_through(g_, st_.coloring, e, b)) return false;
                }
        }
        return true;
    }

    void commit() {
        finished_ = true;
        if (!st_.options.record_trace) return;
        TraceStep step;
        step.kind = cfg_.kind;
        for (size_t i = 0; i < labels_.size(); ++i) {
            if (i) step.branch += " ; ";
            step.branch += labels_[i];
        }
        step.ops = ops_;
        st_.trace.steps.push_back(std::move(step));
    }

    ColorizerState& st_;
    const Graph& g_;
    const Configuration& cfg_;
    EdgeId uv_;
    Vertex u_, v_;
    EdgeColoring entry_;
    std::vector<std::pair<EdgeId, int>> undo_;
    std::vector<RecolorOp> ops_;
    std::vector<const char*> labels_;
    bool finished_ = false;
};

// ---------------------------------------------------------------- A1 ------

bool extend_a1(Session& s, const Configuration& cfg) {
    Vertex u = cfg.u, v = cfg.v, w = cfg.w;
    EdgeId e_vw = s.edge_between(v, w);
    int cw = s.color(e_vw);
    auto cu = s.C(u);
    if (!contains(cu, cw)) throw BranchMismatchError("A1: free completion missed");

    EdgeId e_u1 = s.edge_of_color(u, cw);
    Vertex u1 = s.g().edge(e_u1).other(u);
    auto freev = s.free_colors();
    auto expected = sorted_union(freev, {cw});
    // Every free color is blocked, which pins the whole neighborhood:
    if (s.deg(u) != 9 || s.C(w) != expected || s.C(u1) != expected)
        throw BranchMismatchError("A1: blocked state does not match the forced structure");

    int c2 = -1;
    for (int c : cu)
        if (c != cw) {
            c2 = c;
            break;
        }
    if (c2 < 0) throw BranchMismatchError("A1: no second color at u");
    EdgeId e_u2 = s.edge_of_color(u, c2);
    if (!s.try_batch({{e_vw, c2}}, "A1 rotate vw")) throw BranchMismatchError("A1: vw recolor");
    if (s.direct()) return true;
    if (s.C(s.g().edge(e_u2).other(u)) != sorted_union(freev, {c2}))
        throw BranchMismatchError("A1: second blocked state mismatch");
    if (s.finish_with_any({{e_u1, c2}, {e_u2, cw}}, s.free_colors(), "A1 switch")) return true;
    throw BranchMismatchError("A1: exhausted");
}

// ---------------------------------------------------------------- A2 ------

// Returns true when finished; false when the state was reduced and the
// cascade should restart.
bool extend_a2(Session& s, const Configuration& cfg) {
    Vertex u = cfg.u, v = cfg.v, w = cfg.w;
    EdgeId e_vw = s.edge_between(v, w);
    int cw = s.color(e_vw);
    auto cu = s.C(u);
    if (!contains(cu, cw)) throw BranchMismatchError("A2: free completion missed");

    // Colors on edges to small (degree <= 8) neighbors of u.
    std::vector<int> small8, big9, two_cols;
    for (auto [x, e] : s.g().neighbors(u)) {
        if (x == v || s.color(e) == kUncolored) continue;
        if (s.deg(x) <= 8) small8.push_back(s.color(e));
        if (s.deg(x) >= 9) big9.push_back(s.color(e));
        if (s.deg(x) == 2) two_cols.push_back(s.color(e));
    }
    std::sort(small8.begin(), small8.end());
    std::sort(big9.begin(), big9.end());
    std::sort(two_cols.begin(), two_cols.end());

    if (contains(small8, cw)) {
        Vertex ui = s.endpoint_of_color(u, cw);
        auto cui = s.C(ui);
        std::vector<int> cands;
        for (int jc = 1; jc <= s.palette(); ++jc)
            if (!contains(cu, jc) && !contains(cui, jc)) cands.push_back(jc);
        if (s.finish_with_any({}, cands, "A2 small anchor")) return true;
        throw BranchMismatchError("A2: small anchor exhausted");
    }

    // c(vw) sits on a big neighbor; move it onto a small one if possible.
    auto cwv = s.C(w);
    for (int sc : small8)
        if (!contains(cwv, sc) && s.try_batch({{e_vw, sc}}, "A2 lower vw")) return false;

    if (cfg.kind == ConfigKind::A2_1)
        throw BranchMismatchError("A2.1: guard chain exceeds the degree of w");

    // --- A2.2 deep cascade ---
    if (big9.size() != 8) throw BranchMismatchError("A2.2: expected exactly 8 big neighbors");

    // (*2.2) probe: free the anchor through another big neighbor.
    std::vector<int> off_palette;  // palette minus C(u)
    for (int c = 1; c <= s.palette(); ++c)
        if (!contains(cu, c)) off_palette.push_back(c);
    for (int i : big9) {
        if (i == cw) continue;
        Vertex ui = s.endpoint_of_color(u, i);
        for (int j : off_palette) {
            if (s.path(ui, w, i, j)) continue;
            if (s.try_finish({{e_vw, i}}, j, "(*2.2) move vw to big")) return true;
        }
    }

    // u9: the largest small neighbor (the configuration orders neighbors by
    // decreasing degree, so it is the first small entry).
    Vertex u9 = -1;
    int best = -1;
    for (auto [x, e] : s.g().neighbors(u)) {
        if (x == v || s.color(e) == kUncolored || s.deg(x) > 8) continue;
        if (s.deg(x) > best || (s.deg(x) == best && x < u9)) {
            best = s.deg(x);
            u9 = x;
        }
    }

    if (u9 >= 0) {
        int c9 = s.color(s.edge_between(u, u9));
        // (*2.3) probe: no (i, c9)-path from some big neighbor to w.
        for (int i : big9) {
            Vertex ui = s.endpoint_of_color(u, i);
            if (s.path(ui, w, i, c9)) continue;
            auto cu9 = s.C(u9);
            std::set<int> blocked(cu.begin(), cu.end());
            blocked.insert(cu9.begin(), cu9.end());
            bool touches_two = false;
            for (int a : cu9)
                if (a != c9 && contains(two_cols, a)) touches_two = true;
            if (touches_two) {
                for (int a : cu9) {
                    if (a == c9 || !contains(two_cols, a)) continue;
                    Vertex ua = s.endpoint_of_color(u, a);
                    for (int b : s.C(ua)) blocked.insert(b);
                }
            }
            EdgeId e_u9 = s.edge_between(u, u9);
            for (int b = 1; b <= s.palette(); ++b) {
                if (blocked.count(b)) continue;
                std::vector<Recolor> batch{{e_u9, b}};
                if (i != cw) batch.push_back({e_vw, i});
                if (s.try_finish(batch, c9, "(*2.3) release middle color")) return true;
            }
        }

        // (*2.4) probe: no (i, j)-path for a 2-neighbor color j.
        for (int i : big9) {
            Vertex ui = s.endpoint_of_color(u, i);
            for (int j : two_cols) {
                if (s.path(ui, w, i, j)) continue;
                Vertex uj = s.endpoint_of_color(u, j);
                auto cuj = s.C(uj);
                std::set<int> blocked(cu.begin(), cu.end());
                blocked.insert(cuj.begin(), cuj.end());
                for (int a : cuj) {
                    if (a == j) continue;
                    if (contains(two_cols, a) || a == c9) {
                        Vertex ua = s.endpoint_of_color(u, a);
                        for (int b : s.C(ua)) blocked.insert(b);
                    }
                }
                EdgeId e_uj = s.edge_between(u, uj);
                for (int b = 1; b <= s.palette(); ++b) {
                    if (blocked.count(b)) continue;
                    std::vector<Recolor> batch{{e_uj, b}};
                    if (i != cw) batch.push_back({e_vw, i});
                    if (s.try_finish(batch, j, "(*2.4) release leaf color")) return true;
                }
            }
        }

        // (*2.5): with every probe blocked the neighborhoods are pinned.
        std::vector<int> rest;
        for (int c = 1; c <= s.palette(); ++c)
            if (!contains(big9, c)) rest.push_back(c);
        if (s.C(w) != sorted_union(rest, {cw}))
            throw BranchMismatchError("A2.2: (*2.5) mismatch at w");
        for (int i : big9) {
            Vertex ui = s.endpoint_of_color(u, i);
            if (s.C(ui) != sorted_union(rest, {i}))
                throw BranchMismatchError("A2.2: (*2.5) mismatch at a big neighbor");
        }

        // Two big colors admitting no alternating path into u9 in either
        // orientation must exist because u9 misses one of them.
        int p = -1, q = -1;
        for (int i0 : big9) {
            for (int j0 : big9) {
                if (i0 == j0) continue;
                Vertex ui0 = s.endpoint_of_color(u, i0);
                Vertex uj0 = s.endpoint_of_color(u, j0);
                if (!s.path(uj0, u9, i0, c9) && !s.path(ui0, u9, j0, c9)) {
                    p = i0;
                    q = j0;
                    break;
                }
            }
            if (p > 0) break;
        }
        if (p < 0) throw BranchMismatchError("A2.2: no switchable color pair");

        EdgeId e_p = s.edge_of_color(u, p);
        EdgeId e_q = s.edge_of_color(u, q);
        if (!s.try_batch_proper_only({{e_p, q}, {e_q, p}}, "A2.2 switch"))
            throw BranchMismatchError("A2.2: switch rejected");

        // Cycles the switch may create run through the 2-neighbors only; kill
        // them pairwise, then by recoloring the far edge of a survivor.
        auto members = [&](int anchor) {
            std::vector<Vertex> out;
            for (int t : two_cols) {
                EdgeId e_t = s.edge_of_color(u, t);
                if (e_t < 0) continue;  // recolored earlier in this cascade
                if (bichromatic_cycle_through(s.g(), /*coloring via session*/
                                              // session coloring is st_.coloring
                                              *(const EdgeColoring*)nullptr, e_t, anchor))
                    out.push_back(s.g().edge(e_t).other(u));
            }
            return out;
        };
        (void)members;

        auto collect = [&](int anchor) {
            std::vector<Vertex> out;
            for (int t : two_cols) {
                EdgeId e_t = s.edge_of_color(u, t);
                if (e_t < 0 || t == anchor) continue;
                if (bichromatic_cycle_through_session(s, e_t, anchor))
                    out.push_back(s.g().edge(e_t).other(u));
            }
            return out;
        };

        for (int anchor : {p, q}) {
            auto T = collect(anchor);
            while (T.size() >= 2) {
                EdgeId ea = s.edge_between(u, T[0]);
                EdgeId eb = s.edge_between(u, T[1]);
                int ca = s.color(ea), cb = s.color(eb);
                if (!s.try_batch_proper_only({{ea, cb}, {eb, ca}}, "A2.2 pair switch"))
                    throw BranchMismatchError("A2.2: pair switch rejected");
                T = collect(anchor);
            }
            if (T.size() == 1) {
                Vertex ut = T[0];
                EdgeId e_ut = s.edge_between(u, ut);
                int ct = s.color(e_ut);
                // far edge of the 2-vertex carries the anchor color
                EdgeId far = -1;
                for (auto [x, e] : s.g().neighbors(ut))
                    if (x != u && s.color(e) != kUncolored) far = e;
                if (far < 0 || s.color(far) != anchor)
                    throw BranchMismatchError("A2.2: survivor shape mismatch");
                Vertex xt = s.g().edge(far).other(ut);
                int avoid = anchor == p ? q : p;
                auto cxt = s.C(xt);
                bool fixed = false;
                for (int pc = 1; pc <= s.palette() && !fixed; ++pc) {
                    if (pc == avoid || contains(cxt, pc) || pc == ct) continue;
                    std::vector<Recolor> batch{{far, pc}};
                    auto cu_now = s.C(u);
                    if (contains(cu_now, pc) && (contains(two_cols, pc) || pc == c9)) {
                        Vertex upc = s.endpoint_of_color(u, pc);
                        auto cupc = s.C(upc);
                        for (int j1 = 1; j1 <= s.palette(); ++j1) {
                            if (contains(cu_now, j1) || contains(cupc, j1)) continue;
                            batch.push_back({e_ut, j1});
                            break;
                        }
                    }
                    if (s.try_batch_proper_only(batch, "A2.2 break survivor")) fixed = true;
                }
                if (!fixed) throw BranchMismatchError("A2.2: survivor unfixable");
            }
        }
        std::vector<int> finals;
        auto cu_now = s.C(u);
        for (int c = 1; c <= s.palette(); ++c)
            if (!contains(cu_now, c) && c != cw) finals.push_back(c);
        if (s.finish_with_any({}, finals, "A2.2 finish")) return true;
    }
    throw BranchMismatchError("A2.2: exhausted");
}

}  // namespace

// Placeholder: replaced below by a member-accessing friend helper.
bool bichromatic_cycle_through_session(Session&, EdgeId, int);

}  // namespace aec
