#include "spheredeg/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

bool is_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void subsets_of_size(const Face& face, std::size_t size, std::size_t start, Face& cur,
                     const std::function<void(const Face&)>& emit) {
    if (cur.size() == size) {
        emit(cur);
        return;
    }
    for (std::size_t i = start; i + (size - cur.size()) <= face.size(); ++i) {
        cur.push_back(face[i]);
        subsets_of_size(face, size, i + 1, cur, emit);
        cur.pop_back();
    }
}

std::string face_text(const Face& face) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out << ",";
        out << face[i];
    }
    out << "}";
    return out.str();
}

}  // namespace

Face normalize_face(Face face) {
    std::sort(face.begin(), face.end());
    auto dup = std::adjacent_find(face.begin(), face.end());
    if (dup != face.end()) {
        throw SchemaError("face repeats label \"" + *dup + "\"");
    }
    return face;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
    if (facets.empty()) {
        throw SchemaError("complex requires at least one facet");
    }
    for (const auto& facet : facets) {
        if (facet.empty()) throw SchemaError("facets must be nonempty");
    }
    return make(facets);
}

SimplicialComplex SimplicialComplex::make(const std::vector<Face>& facets) {
    std::vector<Face> normalized;
    normalized.reserve(facets.size());
    for (const auto& facet : facets) {
        if (facet.empty()) continue;
        normalized.push_back(normalize_face(facet));
    }
    // Keep only maximal faces.
    std::sort(normalized.begin(), normalized.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    SimplicialComplex out;
    for (const auto& face : normalized) {
        bool absorbed = false;
        for (const auto& kept : out.facets_) {
            if (is_subset(face, kept)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) out.facets_.push_back(face);
    }
    std::sort(out.facets_.begin(), out.facets_.end());
    std::set<std::string> labels;
    for (const auto& facet : out.facets_) labels.insert(facet.begin(), facet.end());
    out.labels_.assign(labels.begin(), labels.end());
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& facet : facets_) {
        d = std::max(d, static_cast<int>(facet.size()) - 1);
    }
    return d;
}

bool SimplicialComplex::has_label(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool SimplicialComplex::has_face(const Face& face) const {
    Face probe = normalize_face(face);
    if (probe.empty()) return !empty();
    for (const auto& facet : facets_) {
        if (is_subset(probe, facet)) return true;
    }
    return false;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int p) const {
    if (p < 0) return {};
    std::set<Face> found;
    Face cur;
    for (const auto& facet : facets_) {
        if (static_cast<int>(facet.size()) < p + 1) continue;
        subsets_of_size(facet, static_cast<std::size_t>(p) + 1, 0, cur,
                        [&](const Face& f) { found.insert(f); });
    }
    return {found.begin(), found.end()};
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t face_cap) const {
    std::vector<Face> out;
    for (int p = 0; p <= dim(); ++p) {
        auto faces = faces_of_dim(p);
        if (out.size() + faces.size() > face_cap) {
            throw ResourceLimitError("complex exceeds the face cap of " +
                                     std::to_string(face_cap));
        }
        out.insert(out.end(), faces.begin(), faces.end());
    }
    return out;
}

std::size_t SimplicialComplex::face_count(std::size_t face_cap) const {
    return all_faces(face_cap).size();
}

SimplicialComplex remove_open_star(const SimplicialComplex& k, const Face& face) {
    Face probe = normalize_face(face);
    if (!k.has_face(probe)) {
        throw FaceNotInComplexError("cannot remove the star of " + face_text(probe));
    }
    std::vector<Face> facets;
    for (const auto& facet : k.facets()) {
        if (!is_subset(probe, facet)) {
            facets.push_back(facet);
            continue;
        }
        for (const auto& w : probe) {
            Face trimmed;
            for (const auto& label : facet) {
                if (label != w) trimmed.push_back(label);
            }
            if (!trimmed.empty()) facets.push_back(trimmed);
        }
    }
    return SimplicialComplex::make(facets);
}

SimplicialComplex link(const SimplicialComplex& k, const Face& face) {
    Face probe = normalize_face(face);
    if (!k.has_face(probe)) {
        throw FaceNotInComplexError("link of a non-face " + face_text(probe));
    }
    std::vector<Face> facets;
    for (const auto& facet : k.facets()) {
        if (!is_subset(probe, facet)) continue;
        Face rest;
        for (const auto& label : facet) {
            if (!std::binary_search(probe.begin(), probe.end(), label)) {
                rest.push_back(label);
            }
        }
        if (!rest.empty()) facets.push_back(rest);
    }
    return SimplicialComplex::make(facets);
}

SimplicialComplex star(const SimplicialComplex& k, const Face& face) {
    Face probe = normalize_face(face);
    if (!k.has_face(probe)) {
        throw FaceNotInComplexError("star of a non-face " + face_text(probe));
    }
    std::vector<Face> facets;
    for (const auto& facet : k.facets()) {
        if (is_subset(probe, facet)) facets.push_back(facet);
    }
    return SimplicialComplex::make(facets);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
    if (k.has_label(apex)) {
        throw LabelCollisionError("cone apex \"" + apex + "\" already occurs");
    }
    if (k.empty()) {
        return SimplicialComplex::make({{apex}});
    }
    std::vector<Face> facets;
    for (auto facet : k.facets()) {
        facet.push_back(apex);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::make(facets);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& label : a.labels()) {
        if (b.has_label(label)) {
            throw LabelCollisionError("join operands share label \"" + label + "\"");
        }
    }
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Face> facets;
    for (const auto& fa : a.facets()) {
        for (const auto& fb : b.facets()) {
            Face joined = fa;
            joined.insert(joined.end(), fb.begin(), fb.end());
            facets.push_back(std::move(joined));
        }
    }
    return SimplicialComplex::make(facets);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    if (k.empty()) return {};
    for (const auto& label : k.labels()) {
        if (label.find('|') != std::string::npos) {
            throw LabelCollisionError("label \"" + label + "\" contains the subdivision mark");
        }
    }
    auto face_label = [](const Face& face) {
        std::string out;
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (i) out += "|";
            out += face[i];
        }
        return out;
    };
    // Facets of the subdivision are full flags inside a facet; every flag
    // is the prefix chain of exactly one ordering of that facet.
    std::vector<Face> facets;
    for (const auto& facet : k.facets()) {
        Face order = facet;
        std::sort(order.begin(), order.end());
        do {
            Face chain;
            Face prefix;
            for (const auto& label : order) {
                prefix.push_back(label);
                Face sorted_prefix = prefix;
                std::sort(sorted_prefix.begin(), sorted_prefix.end());
                chain.push_back(face_label(sorted_prefix));
            }
            facets.push_back(normalize_face(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::make(facets);
}

bool is_connected_complex(const SimplicialComplex& k) {
    if (k.empty()) return false;
    std::map<std::string, std::string> parent;
    for (const auto& label : k.labels()) parent[label] = label;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& facet : k.facets()) {
        for (std::size_t i = 1; i < facet.size(); ++i) {
            parent[find(facet[0])] = find(facet[i]);
        }
    }
    std::string root = find(k.labels().front());
    for (const auto& label : k.labels()) {
        if (find(label) != root) return false;
    }
    return true;
}

bool is_pure(const SimplicialComplex& k, int d) {
    for (const auto& facet : k.facets()) {
        if (static_cast<int>(facet.size()) != d + 1) return false;
    }
    return true;
}

long long euler_characteristic(const SimplicialComplex& k) {
    long long chi = 0;
    for (int p = 0; p <= k.dim(); ++p) {
        long long count = static_cast<long long>(k.faces_of_dim(p).size());
        chi += (p % 2 == 0) ? count : -count;
    }
    return chi;
}

SimplicialComplex boundary_complex(const SimplicialComplex& k, int d) {
    if (k.empty() || !is_pure(k, d)) {
        throw Error("boundary_complex requires a nonempty pure complex");
    }
    if (d == 0) return {};
    std::map<Face, int> ridge_count;
    Face cur;
    for (const auto& facet : k.facets()) {
        subsets_of_size(facet, static_cast<std::size_t>(d), 0, cur,
                        [&](const Face& ridge) { ridge_count[ridge] += 1; });
    }
    std::vector<Face> facets;
    for (const auto& [ridge, count] : ridge_count) {
        if (count == 1) facets.push_back(ridge);
    }
    return SimplicialComplex::make(facets);
}

}  // namespace spheredeg
