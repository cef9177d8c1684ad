#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace spheredeg {

/// A face is a sorted duplicate-free list of vertex labels.
using Face = std::vector<std::string>;

/// Finite abstract simplicial complex stored by its maximal faces.
///
/// Facets are sorted label lists, mutually incomparable, kept in
/// lexicographic order; every query and derived list is deterministic.
/// The default-constructed complex is empty (it has no faces at all);
/// from_facets rejects empty input because user-supplied complexes must
/// be nonempty, while internal constructions (links, sublevels) may
/// legitimately come out empty.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds from user input. Throws SchemaError on an empty facet list,
    /// an empty facet, or a facet with repeated labels.
    static SimplicialComplex from_facets(const std::vector<Face>& facets);

    /// Builds from internal data; accepts the empty list.
    static SimplicialComplex make(const std::vector<Face>& facets);

    bool empty() const { return facets_.empty(); }
    /// Dimension of the largest facet; -1 for the empty complex.
    int dim() const;
    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t facet_count() const { return facets_.size(); }
    std::size_t vertex_count() const { return labels_.size(); }

    bool has_label(const std::string& label) const;
    /// True when face (any order, no duplicates) is a face of the complex.
    bool has_face(const Face& face) const;

    /// All faces of dimension p, sorted lexicographically.
    std::vector<Face> faces_of_dim(int p) const;
    /// All nonempty faces sorted by (dimension, labels). Throws
    /// ResourceLimitError when more than face_cap faces would be listed.
    std::vector<Face> all_faces(std::size_t face_cap = 200000) const;
    std::size_t face_count(std::size_t face_cap = 200000) const;

    bool operator==(const SimplicialComplex& other) const {
        return facets_ == other.facets_;
    }

private:
    std::vector<Face> facets_;
    std::vector<std::string> labels_;
};

/// Sorts, checks for duplicates, and returns the normalized face.
/// Throws SchemaError when a label repeats.
Face normalize_face(Face face);

/// Faces of the complex not meeting face, together with those faces of
/// facets through face that miss at least one of its vertices: the result
/// of deleting the open star of face. Requires face to be a face.
SimplicialComplex remove_open_star(const SimplicialComplex& k, const Face& face);

/// link(k, face) = { tau : tau disjoint from face, tau union face a face }.
SimplicialComplex link(const SimplicialComplex& k, const Face& face);

/// Closed star: all facets containing face.
SimplicialComplex star(const SimplicialComplex& k, const Face& face);

/// Cone with a fresh apex label over k; cone over the empty complex is
/// the single point apex. Throws LabelCollisionError when apex occurs in k.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

/// Join of complexes on disjoint label sets; the empty complex is the
/// identity. Throws LabelCollisionError when labels overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Barycentric subdivision; the vertex for face {a, b} is labeled "a|b".
/// Throws LabelCollisionError when an input label contains '|'.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// True when any two vertices are joined by a chain of shared facets.
bool is_connected_complex(const SimplicialComplex& k);

/// True when every facet has dimension d.
bool is_pure(const SimplicialComplex& k, int d);

/// Integer Euler characteristic (unreduced).
long long euler_characteristic(const SimplicialComplex& k);

/// Faces of dimension d-1 lying in exactly one facet of a pure d-complex.
/// The result is empty for a closed complex.
SimplicialComplex boundary_complex(const SimplicialComplex& k, int d);

/// Three-valued recognition result. Yes and No are certified; Unverified
/// means every computed necessary condition passed but the dimension is
/// beyond the certified range.
enum class Recognition { No, Yes, Unverified };

/// Certified for d <= 2 via surface and graph classification; for d >= 3
/// the answer is No when a manifold or homology condition fails and
/// Unverified otherwise.
Recognition is_combinatorial_sphere(const SimplicialComplex& k, int d);
Recognition is_combinatorial_ball(const SimplicialComplex& k, int d);

}  // namespace spheredeg
