#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aec/embedding.hpp"
#include "aec/graph.hpp"
#include "aec/rational.hpp"

namespace aec {

/// Weights before or after discharging. Indices are local to the embedded
/// component; the total over vertices and faces is an Euler invariant.
struct WeightAssignment {
    std::vector<Rational> vertex_weights;
    std::vector<Rational> face_weights;

    Rational total() const;
};

/// One application of a transfer rule: vertex -> incident face, at a specific
/// corner of the face walk (faces can meet a vertex several times).
struct Transfer {
    Vertex from;
    int face;
    int corner;  // index into the face walk where `from` is the corner vertex
    Rational amount;
    std::string rule;        // "R1".."R4"
    std::string case_label;  // which row of the rule table matched
};

/// G-side degree information for vertices of a stripped component. The
/// transfer rules mix H-degrees (in the component) with censuses taken in the
/// original graph.
struct HostCensus {
    const Graph* host = nullptr;
    std::vector<Vertex> to_original;  // local -> host vertex

    int host_degree(Vertex local) const { return host->degree(to_original[local]); }
    int n_k(Vertex local, int k) const {
        return host->neighbors_with_degree(to_original[local], k);
    }
    int n_at_most(Vertex local, int k) const {
        return host->neighbors_with_degree_at_most(to_original[local], k);
    }
};

/// w(u) = 2 d_H(u) - 6 and w(f) = d(f) - 6; asserts the component total is
/// exactly -12 (throws EmbeddingError on a genus mismatch).
WeightAssignment initial_weights(const Graph& h, const PlaneEmbedding& emb);
WeightAssignment initial_weights(const Graph& h, const std::vector<Face>& faces);

/// Exact amount vertex y sends to face `f` at its corner `corner` of the
/// walk, by the rule tables. Returns 0 when no row applies. `matched` (when
/// given) collects every row that applies, for the totality audit.
Rational corner_transfer(const Graph& h, const HostCensus& census, const std::vector<Face>& faces,
                         int f, int corner, std::string* rule = nullptr,
                         std::string* case_label = nullptr,
                         std::vector<std::string>* matched = nullptr);

/// Table value for vertex y on face f. y must lie on b(f); if the face meets
/// y several times this reports the first corner.
Rational transfer_amount(const Graph& h, const HostCensus& census, const std::vector<Face>& faces,
                         int f, Vertex y);

struct ComponentReport {
    Graph h;
    PlaneEmbedding embedding;
    std::vector<Face> faces;
    std::vector<Vertex> to_original;
    WeightAssignment initial;
    WeightAssignment final_weights;
    std::vector<Transfer> transfers;
    std::vector<int> bad_three_faces_at;        // m'_3(v) diagnostic
    std::vector<std::pair<char, int>> negatives;  // ('v', id) or ('f', id) with final < 0
};

struct DischargeReport {
    std::vector<ComponentReport> components;

    Rational total_initial() const;
    Rational total_final() const;
};

/// Runs the full weight system on H = strip_two_vertices(g), one embedded
/// component at a time; the embedding of each component is the restriction of
/// `emb_g`. Conservation is asserted exactly. Negative final weights are
/// expected on real inputs and reported as diagnostics.
DischargeReport discharge(const Graph& g, const PlaneEmbedding& emb_g);

/// Audit helper: corners where more than one rule row matched.
std::vector<std::string> rule_ambiguities(const Graph& h, const HostCensus& census,
                                          const std::vector<Face>& faces);

}  // namespace aec
