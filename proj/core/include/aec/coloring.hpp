#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

inline constexpr int kUncolored = 0;

/// Partial or total edge coloring with colors in 1..palette. Color values are
/// opaque labels: no algorithm in this library may branch on literal values.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int edge_count, int palette)
        : color_(edge_count, kUncolored), palette_(palette) {}

    int palette() const { return palette_; }
    int size() const { return static_cast<int>(color_.size()); }

    int color(EdgeId e) const { return color_[e]; }
    bool colored(EdgeId e) const { return color_[e] != kUncolored; }
    void set(EdgeId e, int c) { color_[e] = c; }
    void unset(EdgeId e) { color_[e] = kUncolored; }

    int colored_count() const;
    bool is_total() const { return colored_count() == size(); }

    const std::vector<int>& raw() const { return color_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<int> color_;
    int palette_ = 0;
};

/// C(v): the set of colors on currently colored edges incident to v, sorted.
std::vector<int> colors_at(const Graph& g, const EdgeColoring& c, Vertex v);

/// Edge of color `col` incident to v, if any. Throws GraphError if two edges
/// at v share the color (improper input).
std::optional<EdgeId> edge_of_color_at(const Graph& g, const EdgeColoring& c, Vertex v, int col);

struct PropernessViolation {
    Vertex at;
    EdgeId e1;
    EdgeId e2;
};

/// First pair of same-colored adjacent edges in deterministic order
/// (lowest vertex, then lowest edge ids), or nullopt.
std::optional<PropernessViolation> find_properness_violation(const Graph& g,
                                                             const EdgeColoring& c);

struct BichromaticCycle {
    std::vector<Vertex> vertices;  // cyclic order, starting at the lowest vertex
    int color_i;
    int color_j;
};

/// First bichromatic cycle by lowest color pair, then lowest vertex, or
/// nullopt. Requires a proper (possibly partial) coloring.
std::optional<BichromaticCycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c);

/// True iff a path between u and v alternates colors i and j (either color
/// may start). Under properness the {i,j}-subgraph has maximum degree 2, so
/// this walks at most one chain from u. Optionally returns the path.
bool exists_bichromatic_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, int i,
                             int j, std::vector<Vertex>* witness = nullptr);

/// Walks the two-colored chain containing `e` and reports whether it closes
/// into a cycle. The chain colors are c(e) and `other`.
bool bichromatic_cycle_through(const Graph& g, const EdgeColoring& c, EdgeId e, int other);

enum class RejectReason { Incomplete, Improper, Palette, Cycle };

struct VerifyResult {
    bool accepted = false;
    RejectReason reason{};
    std::optional<EdgeId> offending_edge;
    std::optional<PropernessViolation> violation;
    std::optional<BichromaticCycle> cycle;

    std::string describe() const;
};

/// Accepts iff the coloring is total, proper, uses colors within 1..k, and
/// the union of every two color classes is a forest.
VerifyResult verify_acyclic(const Graph& g, const EdgeColoring& c, int k);

/// Same acceptance predicate restricted to a subset of "active" edges; edges
/// outside the mask are ignored entirely (used while the inductive colorizer
/// has deleted edges pending re-insertion).
VerifyResult verify_acyclic_masked(const Graph& g, const EdgeColoring& c, int k,
                                   const std::vector<char>& active);

}  // namespace aec
