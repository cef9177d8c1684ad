#include "spheredeg/filtration.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

std::string face_text(const Face& face) {
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += ",";
        out += face[i];
    }
    out += "}";
    return out;
}

// Collapses every edge whose id is not in keep; the result is the dual
// graph of the subsystem spanned by the kept edges.
GenusGraph collapse_to_subset(const GenusGraph& g, const std::set<int>& keep) {
    GenusGraph current = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : current.edges()) {
            if (keep.count(e.id) == 0) {
                current = collapse_edge(current, e.id);
                changed = true;
                break;
            }
        }
    }
    return current;
}

}  // namespace

DegreeFilteredComplex DegreeFilteredComplex::from_faces(
    const SimplicialComplex& complex, const std::map<Face, int>& degrees,
    std::size_t face_cap) {
    DegreeFilteredComplex out;
    out.complex_ = complex;
    for (const auto& [face, value] : degrees) {
        Face norm = normalize_face(face);
        if (norm.empty()) {
            throw SchemaError("degree assignment lists the empty face");
        }
        if (!complex.has_face(norm)) {
            throw SchemaError("degree assigned to a non-face " + face_text(norm));
        }
        if (value < 0) {
            throw SchemaError("negative degree on face " + face_text(norm));
        }
        out.degrees_[norm] = value;
    }
    for (const auto& face : complex.all_faces(face_cap)) {
        if (face.empty()) continue;
        if (out.degrees_.count(face) == 0) {
            throw SchemaError("face " + face_text(face) + " has no degree");
        }
    }
    return out;
}

DegreeFilteredComplex DegreeFilteredComplex::from_graph(const GenusGraph& g) {
    require_valid(g, "filtration");
    if (g.edges().size() > 20) {
        throw ResourceLimitError(
            "graph has " + std::to_string(g.edges().size()) +
            " edges; subsystem filtrations are capped at 20");
    }
    if (g.edges().empty()) {
        throw SchemaError("graph has no edges, so there are no subsystems");
    }

    std::vector<int> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());

    Face all_labels;
    for (int id : ids) all_labels.push_back(std::to_string(id));
    SimplicialComplex full = SimplicialComplex::from_facets({all_labels});

    DegreeFilteredComplex out;
    out.complex_ = full;
    const std::size_t count = ids.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        std::set<int> keep;
        Face face;
        for (std::size_t i = 0; i < count; ++i) {
            if (mask & (std::size_t{1} << i)) {
                keep.insert(ids[i]);
                face.push_back(std::to_string(ids[i]));
            }
        }
        face = normalize_face(face);
        out.degrees_[face] = degree(collapse_to_subset(g, keep));
    }
    return out;
}

int DegreeFilteredComplex::deg(const Face& face) const {
    Face norm = normalize_face(face);
    if (norm.empty()) return 0;
    auto it = degrees_.find(norm);
    if (it == degrees_.end()) {
        throw FaceNotInComplexError("no degree for " + face_text(norm));
    }
    return it->second;
}

SimplicialComplex DegreeFilteredComplex::sublevel(int bound) const {
    std::vector<Face> kept;
    for (const auto& [face, value] : degrees_) {
        if (value <= bound) kept.push_back(face);
    }
    if (kept.empty()) return SimplicialComplex();
    return SimplicialComplex::make(kept);
}

DegreeFilteredComplex additive_weight_filtration(
    const SimplicialComplex& complex,
    const std::map<std::string, int>& weights) {
    std::map<Face, int> degrees;
    for (const auto& face : complex.all_faces()) {
        if (face.empty()) continue;
        int total = 0;
        for (const auto& label : face) {
            auto it = weights.find(label);
            if (it == weights.end()) {
                throw SchemaError("no weight for vertex " + label);
            }
            if (it->second < 0) {
                throw SchemaError("negative weight on vertex " + label);
            }
            total += it->second;
        }
        degrees[face] = total;
    }
    return DegreeFilteredComplex::from_faces(complex, degrees);
}

ValidationReport validate_filtration(const DegreeFilteredComplex& f) {
    ValidationReport report;
    for (const auto& [face, value] : f.degrees()) {
        if (value < 0) {
            report.add("negative-degree", "face " + face_text(face));
        }
        for (const auto& vertex : face) {
            Face smaller;
            for (const auto& other : face) {
                if (other != vertex) smaller.push_back(other);
            }
            if (f.deg(smaller) > value) {
                report.add("face-monotonicity",
                           "deg " + face_text(smaller) + " = " +
                               std::to_string(f.deg(smaller)) + " exceeds deg " +
                               face_text(face) + " = " + std::to_string(value));
            }
        }
        Face core = derived_pillar(f, face);
        if (f.deg(core) != value) {
            report.add("pillar-degree",
                       "derived pillar " + face_text(core) + " of " +
                           face_text(face) + " has degree " +
                           std::to_string(f.deg(core)) + ", expected " +
                           std::to_string(value));
        } else if (derived_pillar(f, core) != core) {
            report.add("pillar-idempotence",
                       "derived pillar " + face_text(core) + " of " +
                           face_text(face) + " is not its own derived pillar");
        }
    }
    return report;
}

Face derived_pillar(const DegreeFilteredComplex& f, const Face& face) {
    Face norm = normalize_face(face);
    const int value = f.deg(norm);
    Face out;
    for (const auto& vertex : norm) {
        Face smaller;
        for (const auto& other : norm) {
            if (other != vertex) smaller.push_back(other);
        }
        if (f.deg(smaller) < value) out.push_back(vertex);
    }
    return out;
}

bool is_pillar_face(const DegreeFilteredComplex& f, const Face& face) {
    return derived_pillar(f, face) == normalize_face(face);
}

SimplicialComplex low_link(const DegreeFilteredComplex& f, const Face& pillar) {
    Face norm = normalize_face(pillar);
    if (norm.empty()) {
        throw NotAPillarError("low link of the empty face is undefined");
    }
    if (!is_pillar_face(f, norm)) {
        throw NotAPillarError(face_text(norm) + " is not a pillar face");
    }
    const int value = f.deg(norm);
    SimplicialComplex lk = link(f.complex(), norm);
    std::vector<Face> kept;
    for (const auto& sigma : lk.all_faces()) {
        if (sigma.empty()) continue;
        Face joined = sigma;
        joined.insert(joined.end(), norm.begin(), norm.end());
        if (f.deg(joined) == value) kept.push_back(sigma);
    }
    if (kept.empty()) return SimplicialComplex();
    return SimplicialComplex::make(kept);
}

}  // namespace spheredeg
