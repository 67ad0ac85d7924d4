#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aec/blocks.hpp"
#include "aec/coloring.hpp"
#include "aec/configuration.hpp"
#include "aec/graph.hpp"

namespace aec {

struct ColorizeOptions {
    int fallback_radius = 6;          // max edges recolored by the safety net
    long exact_node_cap = 2'000'000;  // backtracking budget for small-degree graphs
    long fallback_node_cap = 20'000'000;
    bool record_trace = true;
};

struct RecolorOp {
    EdgeId edge;
    int before;
    int after;
};

struct TraceStep {
    ConfigKind kind{};
    std::string branch;  // e.g. "(*2.3)", "Case 2.2.1", "fallback"
    std::vector<RecolorOp> ops;
};

struct ExtensionTrace {
    std::vector<TraceStep> steps;
};

/// Raised when a 2-connected graph with maximum degree >= 5 has none of the
/// reducible configurations: the input is not planar (or the detector is
/// wrong).
struct NoConfigurationError : std::runtime_error {
    NoConfigurationError() : std::runtime_error("no reducible configuration found") {}
};

/// Raised when every analysed branch and the bounded fallback search fail to
/// extend a coloring; carries the trace for replay.
struct ExtensionFailedError : std::runtime_error {
    explicit ExtensionFailedError(ExtensionTrace t)
        : std::runtime_error("extension failed"), trace(std::move(t)) {}
    ExtensionTrace trace;
};

/// Internal signal: the guard cascade reached a state the case analysis rules
/// out. The caller falls back to the bounded search and logs an incident.
struct BranchMismatchError : std::runtime_error {
    explicit BranchMismatchError(std::string where)
        : std::runtime_error("branch mismatch: " + where) {}
};

/// Workspace for one extension step: the graph with its removal edge
/// uncolored, the fixed palette, and the trace.
struct ColorizerState {
    const Graph* graph = nullptr;
    int palette_size = 0;
    EdgeColoring coloring;
    ExtensionTrace trace;
    int fallback_incidents = 0;
    ColorizeOptions options;
    /// Edge mask for inductive use; empty means all edges active.
    std::vector<char> active;

    bool edge_active(EdgeId e) const { return active.empty() || active[e]; }
    VerifyResult verify() const;
};

struct ColorResult {
    EdgeColoring coloring;
    int palette = 0;
    int fallback_incidents = 0;
    int max_color_used = 0;
    ExtensionTrace trace;
};

/// Theorem-grade entry point: a verified acyclic coloring with palette
/// Delta(g) + 7. Throws NoConfigurationError / ExtensionFailedError.
ColorResult acyclic_color(const Graph& g, const ColorizeOptions& opts = {});

/// Extends state.coloring (total except the removal edge of cfg) to the whole
/// graph along the analysed branches for cfg.kind. Every accepted move is
/// gated by verify_acyclic. Throws BranchMismatchError when the branch guards
/// are exhausted.
void extend_coloring(ColorizerState& state, const Configuration& cfg);

/// Safety net: bounded backtracking over recolorings of up to
/// options.fallback_radius edges within graph distance 2 of uv, plus uv.
/// Throws ExtensionFailedError on exhaustion.
void fallback_extend(ColorizerState& state, EdgeId uv);

/// Exhaustive backtracking for an acyclic k-coloring; nullopt means no such
/// coloring exists. `capped` is set when the node budget ran out (result
/// nullopt then means "unknown", not "none").
std::optional<EdgeColoring> exact_color_small(const Graph& g, int k, long node_cap = 2'000'000,
                                              bool* capped = nullptr);

/// Joins verified per-block colorings at cut vertices by per-block color
/// permutations; the result is verified acyclic.
EdgeColoring merge_blocks(const Graph& g, const BlockTree& bt,
                          const std::vector<EdgeColoring>& block_colorings, int palette);

}  // namespace aec
