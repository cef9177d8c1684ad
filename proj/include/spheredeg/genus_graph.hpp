#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spheredeg/report.hpp"

namespace spheredeg {

/// Vertex of a genus-labeled graph. Exactly one vertex of a valid graph
/// is the basepoint.
struct GraphVertex {
    int id = 0;
    int genus = 0;
    bool basepoint = false;
};

/// Undirected edge between vertex ids. ends are stored sorted, and
/// end_a == end_b encodes a self-loop.
struct GraphEdge {
    int id = 0;
    int end_a = 0;
    int end_b = 0;

    bool is_loop() const { return end_a == end_b; }
};

/// Finite connected multigraph with genus labels and a basepoint.
///
/// These graphs are the combinatorial duals of sphere systems in a
/// connected sum of n copies of S^1 x S^2 with one boundary sphere:
/// vertices are complementary pieces (genus = number of handles of the
/// piece), edges are spheres, and the basepoint is the piece meeting
/// the boundary. The container itself accepts arbitrary candidates so
/// that validate_graph can report violations; every other operation
/// requires a valid graph.
class GenusGraph {
public:
    GenusGraph() = default;
    GenusGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges);

    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    bool has_vertex(int id) const;
    bool has_edge(int id) const;
    const GraphVertex& vertex(int id) const;
    const GraphEdge& edge(int id) const;

    /// Id of the unique basepoint, or nullopt when there is not exactly one.
    std::optional<int> basepoint_id() const;

    bool operator==(const GenusGraph& other) const;

private:
    std::vector<GraphVertex> vertices_;
    std::vector<GraphEdge> edges_;
    std::map<int, std::size_t> vertex_index_;
    std::map<int, std::size_t> edge_index_;
};

/// Convenience constructor: basepoint of genus g0 with the given loop
/// count, no other vertices. Vertex id 0, edge ids 0..loops-1.
GenusGraph make_rose(int basepoint_genus, int loops);

/// Checks every validity rule and reports all violations.
///
/// Rules: structural soundness (unique ids, endpoints exist), exactly one
/// basepoint, nonnegative genus, connectedness, valence(v) + 2 genus(v) >= 3
/// at every non-basepoint vertex v, no genus-0 valence-1 basepoint when
/// other vertices exist, and total genus + first Betti number >= 1.
ValidationReport validate_graph(const GenusGraph& g);

/// Throws InvalidGraphError naming op and the first violation unless g
/// passes validate_graph.
void require_valid(const GenusGraph& g, const char* op);

/// Per-vertex and global counts derived from a valid graph.
struct GraphStats {
    std::map<int, int> valences;  // vertex id -> valence; loops count twice
    int rank_pi1 = 0;             // edges - vertices + 1
    int total_genus = 0;
    int n = 0;                    // total_genus + rank_pi1
    int dim = 0;                  // edges - 1
};

GraphStats graph_stats(const GenusGraph& g);

/// deg(g) = sum over non-basepoint vertices v of valence(v) + 2 genus(v) - 2.
int degree(const GenusGraph& g);

/// Collapses edge edge_id and returns the result; the input is untouched.
///
/// A self-loop at v is removed and genus(v) grows by one. An edge
/// joining u and w merges them into one vertex carrying genus(u) +
/// genus(w); the merged vertex keeps the basepoint id when one end is the
/// basepoint and the smaller id otherwise. Surviving vertex and edge ids
/// are unchanged. The result of collapsing any edge of a valid graph is
/// again valid with the same n.
GenusGraph collapse_edge(const GenusGraph& g, int edge_id);

/// Ids of pillar edges: non-loop edges incident to the basepoint.
/// Collapsing a pillar edge strictly lowers deg; collapsing any other
/// edge preserves deg.
std::set<int> pillar_edges(const GenusGraph& g);

/// True when every edge of g is a pillar edge.
bool is_pillar(const GenusGraph& g);

/// Iteratively collapses non-pillar edges (lowest edge id first) until
/// only pillar edges remain. The result does not depend on the collapse
/// order, and deg(pillar_graph(g)) == deg(g).
GenusGraph pillar_graph(const GenusGraph& g);

/// Canonical encoding of the isomorphism type of a valid graph.
///
/// Isomorphisms preserve the basepoint and genus labels and may permute
/// parallel edges freely, so the type is determined by the genus sequence
/// plus the unordered incidence multiset. The encoding minimizes over
/// vertex orderings that put the basepoint first; two valid graphs are
/// isomorphic iff their canonical forms are equal.
std::string canonical_form(const GenusGraph& g);

/// Rebuilds a representative graph from a canonical_form string.
/// Vertices get ids 0.. in canonical order (basepoint id 0), edges get
/// ids 0.. in encoding order.
GenusGraph graph_from_canonical(const std::string& form);

}  // namespace spheredeg
