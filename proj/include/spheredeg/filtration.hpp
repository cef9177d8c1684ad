#pragma once

#include <map>

#include "spheredeg/genus_graph.hpp"
#include "spheredeg/report.hpp"
#include "spheredeg/simplicial.hpp"

namespace spheredeg {

/// Simplicial complex with a degree assigned to every nonempty face.
/// The empty face has degree 0 by convention.
///
/// The intended axioms, checked by validate_filtration:
///  - face monotonicity: deg(tau minus a vertex) <= deg(tau);
///  - pillar consistency: the derived pillar of tau has the same degree
///    as tau and is its own derived pillar.
class DegreeFilteredComplex {
public:
    DegreeFilteredComplex() = default;

    /// Builds from a complex plus a total degree assignment. Throws
    /// SchemaError when a face is missing a degree, a degree is attached
    /// to a non-face, or a degree is negative. Axioms are not checked
    /// here; run validate_filtration for that.
    static DegreeFilteredComplex from_faces(const SimplicialComplex& complex,
                                            const std::map<Face, int>& degrees,
                                            std::size_t face_cap = 200000);

    /// Filtration of all sphere subsystems of the system dual to g: the
    /// full simplex on the edge ids of g, where the degree of a subset is
    /// the degree of the graph obtained by collapsing every other edge.
    /// Throws ResourceLimitError when g has more than 20 edges.
    static DegreeFilteredComplex from_graph(const GenusGraph& g);

    const SimplicialComplex& complex() const { return complex_; }
    const std::map<Face, int>& degrees() const { return degrees_; }

    /// Degree of a face; 0 for the empty face. Throws
    /// FaceNotInComplexError for anything that is not a face.
    int deg(const Face& face) const;

    /// Subcomplex of faces with degree <= bound (downward closed whenever
    /// the filtration is monotone).
    SimplicialComplex sublevel(int bound) const;

private:
    SimplicialComplex complex_;
    std::map<Face, int> degrees_;
};

/// deg(face) = sum of the weights of its vertices. Additive weights
/// always satisfy both filtration axioms; the pillar faces are exactly
/// the faces of positive-weight vertices. Weights must be total and
/// nonnegative (SchemaError otherwise).
DegreeFilteredComplex additive_weight_filtration(
    const SimplicialComplex& complex,
    const std::map<std::string, int>& weights);

/// Checks both filtration axioms on every face and reports violations.
ValidationReport validate_filtration(const DegreeFilteredComplex& f);

/// derived_pillar(tau) = { S in tau : deg(tau minus S) < deg(tau) }.
/// The empty face maps to itself.
Face derived_pillar(const DegreeFilteredComplex& f, const Face& face);

/// True when the face equals its own derived pillar.
bool is_pillar_face(const DegreeFilteredComplex& f, const Face& face);

/// low_link(f, c) for a nonempty pillar face c: the subcomplex of link(c)
/// of faces sigma with deg(sigma union c) == deg(c). Downward closed by
/// monotonicity. Throws NotAPillarError unless c is a nonempty pillar face.
SimplicialComplex low_link(const DegreeFilteredComplex& f, const Face& pillar);

}  // namespace spheredeg
