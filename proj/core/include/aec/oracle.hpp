#pragma once

#include <optional>
#include <variant>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

/// Ground-truth acceptance predicate, kept independent of verify_acyclic:
/// properness by pairwise edge comparison and acyclicity by enumerating every
/// cycle (edge subsets that are connected and 2-regular) and checking that
/// none uses exactly two colors. Exponential in m; intended for m <= ~20.
bool oracle_accepts(const Graph& g, const EdgeColoring& c, int k);

struct ExceedsCap {
    int k_max;
};
struct ResourceCapHit {};

/// Smallest k <= k_max admitting a verified acyclic k-coloring, found by
/// exhaustive search ascending from the trivial lower bound. Soft cap:
/// ~16 edges.
std::variant<int, ExceedsCap, ResourceCapHit> exact_acyclic_index(const Graph& g, int k_max,
                                                                  long node_cap = 50'000'000);

}  // namespace aec
