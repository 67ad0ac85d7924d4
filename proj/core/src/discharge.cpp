#include "aec/discharge.hpp"

#include <algorithm>

namespace aec {

Rational WeightAssignment::total() const {
    Rational t;
    for (const auto& w : vertex_weights) t += w;
    for (const auto& w : face_weights) t += w;
    return t;
}

WeightAssignment initial_weights(const Graph& h, const PlaneEmbedding& emb) {
    return initial_weights(h, enumerate_faces(h, emb));
}

WeightAssignment initial_weights(const Graph& h, const std::vector<Face>& faces) {
    if (!h.is_connected() && h.vertex_count() > 0)
        throw EmbeddingError("initial_weights expects a connected component");
    WeightAssignment w;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        w.vertex_weights.push_back(Rational(2 * h.degree(v) - 6));
    for (const Face& f : faces) w.face_weights.push_back(Rational(f.degree() - 6));
    if (h.vertex_count() > 0 && w.total() != Rational(-12))
        throw EmbeddingError("initial weight total is " + w.total().str() + ", expected -12");
    return w;
}

namespace {

struct CornerInfo {
    Vertex y;
    Vertex x;  // flanking neighbor with the larger H-degree
    Vertex z;  // flanking neighbor with the smaller H-degree
};

CornerInfo corner_info(const Graph& h, const Face& face, int corner) {
    int d = face.degree();
    auto [a, y] = face.walk[corner];                 // incoming directed edge
    Vertex c = face.walk[(corner + 1) % d].second;   // outgoing head
    CornerInfo ci;
    ci.y = y;
    ci.x = a;
    ci.z = c;
    if (h.degree(ci.x) < h.degree(ci.z) ||
        (h.degree(ci.x) == h.degree(ci.z) && ci.x > ci.z))
        std::swap(ci.x, ci.z);
    return ci;
}

struct Row {
    Rational amount;
    std::string rule;
    std::string label;
};

// All rule rows matching one corner, in the printed order.
std::vector<Row> matching_rows(const Graph& h, const HostCensus& census, const Face& face,
                               const CornerInfo& ci) {
    std::vector<Row> rows;
    const int dy = h.degree(ci.y);
    const int dx = h.degree(ci.x);
    const int dz = h.degree(ci.z);
    const int df = face.degree();

    if (dy == 4) {
        int n7 = census.n_at_most(ci.y, 7);
        if (n7 == 0) rows.push_back({Rational(1, 2), "R1", "n7-(y)=0"});
        if (n7 == 1 && dz <= 7) rows.push_back({Rational(4, 5), "R1", "n7-(y)=1, dH(z)<=7"});
        if (n7 == 1 && dz >= 8) rows.push_back({Rational(1, 5), "R1", "n7-(y)=1, dH(z)>=8"});
    } else if (dy == 5) {
        int n4 = census.n_k(ci.y, 4);
        if (n4 >= 1) {
            rows.push_back({Rational(4, 5), "R2", "n4(y)>=1"});
        } else {
            if (df >= 4 && df <= 5 && dz <= 8)
                rows.push_back({Rational(1, 2), "R2", "4<=d(f)<=5, dH(z)<=8"});
            if (df == 3 || (df >= 4 && df <= 5 && dz >= 9)) {
                auto add = [&](long long n, long long d, const std::string& lbl) {
                    rows.push_back({Rational(n, d), "R2", lbl});
                };
                if (dx == 5 && dz == 5) add(7, 5, "dH(x)=dH(z)=5");
                if (dx == 6 && dz == 5) add(6, 5, "dH(x)=6, dH(z)=5");
                if (dx == 7 && dz == 5) add(13, 14, "dH(x)=7, dH(z)=5");
                if (dx == 8 && dz == 5) add(1, 1, "dH(x)=8, dH(z)=5");
                if (dx >= 9 && dz == 5) add(11, 12, "dH(x)>=9, dH(z)=5");
                if (dx == 6 && dz == 6) add(1, 1, "dH(x)=dH(z)=6");
                if (dx == 7 && dz == 6) add(6, 7, "dH(x)=7, dH(z)=6");
                if (dx == 8 && dz == 6) add(3, 4, "dH(x)=8, dH(z)=6");
                if (dx >= 9 && dz == 6) add(2, 3, "dH(x)>=9, dH(z)=6");
                if (dx == 7 && dz == 7) add(5, 7, "dH(x)=dH(z)=7");
                if (dx >= 8 && dz == 7) add(9, 14, "dH(x)>=8, dH(z)=7");
                if (dz == 8) add(1, 2, "dH(z)=8");
                if (dz >= 9) add(1, 3, "dH(z)>=9");
            }
        }
    } else if (dy >= 6 && dy <= 9) {
        rows.push_back({Rational(2 * dy - 6, dy), "R3", "dH(y)=" + std::to_string(dy)});
    } else if (dy >= 10) {
        if ((df >= 4 && df <= 5) || (df == 3 && dz >= 6)) {
            rows.push_back({Rational(1), "R4", "4<=d(f)<=5 or d(f)=3 with dH(z)>=6"});
        } else if (df == 3) {
            int n7z = census.n_at_most(ci.z, 7);
            int n4z = census.n_k(ci.z, 4);
            int n4x = census.n_k(ci.x, 4);
            if (dz == 3) rows.push_back({Rational(3, 2), "R4", "dH(z)=3"});
            if (dz == 4 && n7z == 1) rows.push_back({Rational(7, 5), "R4", "dH(z)=4, n7-(z)=1"});
            if (dz == 4 && n7z == 0) rows.push_back({Rational(5, 4), "R4", "dH(z)=4, n7-(z)=0"});
            if (dz == 5 && n4z >= 1 && dx >= 10)
                rows.push_back({Rational(11, 10), "R4", "dH(z)=5, n4(z)>=1, dH(x)>=10"});
            if (dz == 5 && n4z >= 1 && dx >= 6 && dx <= 9)
                rows.push_back({Rational(5, 4), "R4", "dH(z)=5, n4(z)>=1, 6<=dH(x)<=9"});
            if (dx == 5 && dz == 5 && (n4z >= 1 || n4x >= 1))
                rows.push_back({Rational(7, 5), "R4", "dH(x)=dH(z)=5, n4(z)>=1 or n4(x)>=1"});
            if (dz == 5 && n4z == 0 && !(dx == 5 && n4x != 0))
                rows.push_back({Rational(4, 3), "R4", "dH(z)=5, n4(z)=0 (n4(x)=0 if dH(x)=5)"});
        }
    }
    return rows;
}

}  // namespace

Rational corner_transfer(const Graph& h, const HostCensus& census, const std::vector<Face>& faces,
                         int f, int corner, std::string* rule, std::string* case_label,
                         std::vector<std::string>* matched) {
    const Face& face = faces[f];
    CornerInfo ci = corner_info(h, face, corner);
    auto rows = matching_rows(h, census, face, ci);
    if (matched)
        for (auto& r : rows) matched->push_back(r.rule + ": " + r.label);
    if (rows.empty()) return Rational(0);
    if (rule) *rule = rows.front().rule;
    if (case_label) *case_label = rows.front().label;
    return rows.front().amount;  // rows matched top to bottom as printed
}

Rational transfer_amount(const Graph& h, const HostCensus& census, const std::vector<Face>& faces,
                         int f, Vertex y) {
    const Face& face = faces[f];
    for (int corner = 0; corner < face.degree(); ++corner) {
        if (face.walk[corner].second == y)
            return corner_transfer(h, census, faces, f, corner);
    }
    throw EmbeddingError("transfer_amount: vertex " + std::to_string(y) + " not on face " +
                         std::to_string(f));
}

Rational DischargeReport::total_initial() const {
    Rational t;
    for (auto& c : components) t += c.initial.total();
    return t;
}

Rational DischargeReport::total_final() const {
    Rational t;
    for (auto& c : components) t += c.final_weights.total();
    return t;
}

std::vector<std::string> rule_ambiguities(const Graph& h, const HostCensus& census,
                                          const std::vector<Face>& faces) {
    std::vector<std::string> out;
    for (size_t f = 0; f < faces.size(); ++f) {
        for (int corner = 0; corner < faces[f].degree(); ++corner) {
            std::vector<std::string> rows;
            corner_transfer(h, census, faces, static_cast<int>(f), corner, nullptr, nullptr,
                            &rows);
            if (rows.size() > 1) {
                std::string s = "face " + std::to_string(f) + " corner " + std::to_string(corner) +
                                " matches:";
                for (auto& r : rows) s += " [" + r + "]";
                out.push_back(s);
            }
        }
    }
    return out;
}

DischargeReport discharge(const Graph& g, const PlaneEmbedding& emb_g) {
    validate_embedding(g, emb_g);
    DischargeReport report;
    StripResult strip = strip_two_vertices(g);
    for (size_t ci = 0; ci < strip.components.size(); ++ci) {
        ComponentReport comp;
        comp.h = strip.components[ci];
        comp.to_original = strip.to_original[ci];
        comp.embedding = induced_embedding(g, emb_g, comp.to_original);
        comp.faces = enumerate_faces(comp.h, comp.embedding);
        comp.initial = initial_weights(comp.h, comp.faces);
        comp.final_weights = comp.initial;

        HostCensus census{&g, comp.to_original};
        for (size_t f = 0; f < comp.faces.size(); ++f) {
            const Face& face = comp.faces[f];
            for (int corner = 0; corner < face.degree(); ++corner) {
                std::string rule, label;
                Rational amt =
                    corner_transfer(comp.h, census, comp.faces, static_cast<int>(f), corner,
                                    &rule, &label);
                if (amt == Rational(0)) continue;
                Vertex y = face.walk[corner].second;
                comp.final_weights.vertex_weights[y] -= amt;
                comp.final_weights.face_weights[f] += amt;
                comp.transfers.push_back({y, static_cast<int>(f), corner, amt, rule, label});
            }
        }

        if (comp.final_weights.total() != comp.initial.total())
            throw EmbeddingError("discharge: conservation violated");

        // m'_3(v): incident bad 3-faces (3-face whose boundary holds a 3-vertex).
        comp.bad_three_faces_at.assign(comp.h.vertex_count(), 0);
        for (const Face& face : comp.faces) {
            if (face.degree() != 3) continue;
            bool bad = false;
            for (auto [a, b] : face.walk) bad = bad || comp.h.degree(b) == 3;
            if (!bad) continue;
            for (auto [a, b] : face.walk) comp.bad_three_faces_at[b]++;
        }

        for (Vertex v = 0; v < comp.h.vertex_count(); ++v)
            if (comp.final_weights.vertex_weights[v] < Rational(0))
                comp.negatives.push_back({'v', v});
        for (size_t f = 0; f < comp.faces.size(); ++f)
            if (comp.final_weights.face_weights[f] < Rational(0))
                comp.negatives.push_back({'f', static_cast<int>(f)});

        report.components.push_back(std::move(comp));
    }
    return report;
}

}  // namespace aec
