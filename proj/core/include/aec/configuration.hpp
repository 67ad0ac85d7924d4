#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

enum class ConfigKind { A1, A2_1, A2_2, A3_1, A3_2, A3_3, A4_1, A4_2 };

std::string to_string(ConfigKind k);
std::optional<ConfigKind> config_kind_from_string(const std::string& s);

/// Witness of one reducible configuration together with the edge the
/// induction deletes.
///
/// Field meaning by kind:
///  - A1:   path u-v-w with d(v)=2 and d(u)<=9; removal edge uv.
///  - A2_*: center u with a 2-neighbor v (n_2(u)>=1, n_{8-}(u)>=d(u)-8);
///          w = the neighbor of v other than u; `neighbors` holds
///          u_1..u_{d(u)-1} sorted by decreasing degree (ties by id);
///          removal edge uv.
///  - A3_*: 3-vertex u adjacent to v; `neighbors` holds u's two other
///          neighbors u_1, u_2 (for A3_2 u_2 is the common neighbor of u and
///          v, for A3_3 both are); removal edge uv.
///  - A4_*: vertex v whose minimum-degree neighbor is u; `neighbors` holds
///          v_2..v_{d(v)} sorted by increasing degree (ties by id, except
///          that under the second A4_2 disjunct v_{d(v)} is a degree-7
///          neighbor adjacent to u); removal edge uv.
struct Configuration {
    ConfigKind kind{};
    Vertex u = -1;
    Vertex v = -1;
    Vertex w = -1;
    std::vector<Vertex> neighbors;
    int disjunct = 1;  // A4_2 only: which disjunct of the predicate matched
    std::pair<Vertex, Vertex> removal_edge{-1, -1};
};

/// True iff the witness satisfies its kind's degree/adjacency predicate in g.
bool check_configuration(const Graph& g, const Configuration& cfg);

/// Scans kinds in the fixed order A1, A2_1, A2_2, A3_1, A3_2, A3_3, A4_1,
/// A4_2 and vertices in increasing id; returns the first match with fully
/// populated witnesses. When g is 2-connected, planar and Delta >= 5 a match
/// is guaranteed; on other inputs none is possible.
std::optional<Configuration> find_configuration(const Graph& g);

}  // namespace aec
