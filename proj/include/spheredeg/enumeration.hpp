#pragma once

#include <string>
#include <vector>

#include "spheredeg/genus_graph.hpp"
#include "spheredeg/report.hpp"

namespace spheredeg {

/// Parameters for type enumeration: all isomorphism types of valid graphs
/// with invariant n and deg <= max_degree.
struct EnumerationRequest {
    int n = 1;
    int max_degree = 0;
    /// Also emit the edgeless graph (single basepoint of genus n).
    bool include_empty = false;
};

/// Hard caps guarding exhaustive sweeps. Exceeding a cap raises
/// ResourceLimitError unless override_caps is set.
struct EnumerationLimits {
    int max_n_plus_d = 12;
    bool override_caps = false;
};

/// Enumerates one representative per isomorphism type, sorted by
/// (edge count, degree, canonical form). Deterministic.
///
/// Degree bounds the shape: deg(v) = valence(v) + 2 genus(v) - 2 >= 1 for
/// every non-basepoint vertex, so a graph of degree <= d has at most d
/// non-basepoint vertices, and edges = non-basepoint count + n - total
/// genus <= n + d.
std::vector<GenusGraph> enumerate_types(const EnumerationRequest& request,
                                        const EnumerationLimits& limits = {});

/// Names accepted by verify_suite.
const std::vector<std::string>& verify_suite_names();

/// Runs one exhaustive verification sweep over all types with n <= n_max
/// and deg <= d_max.
///
/// Suites:
///  - collapse-lemma: collapsing a pillar edge strictly lowers deg,
///    collapsing any other edge preserves deg; every collapse stays valid,
///    keeps n, and (while edges remain) lands on an enumerated type.
///  - pillar-identity: deg(pillar_graph(g)) == deg(g), the pillar graph is
///    a fixed point, and on graphs with <= 5 edges every maximal sequence
///    of non-pillar collapses reaches the same type.
///  - rank-identity: total genus + rank pi_1 is preserved by every collapse.
///  - degree-zero-roses: the degree-0 types are exactly the roses, counted
///    per n (d_max is ignored; the sweep fixes deg 0).
///  - pillar-arithmetic: on every type that equals its own pillar graph and
///    has genus concentrated at the basepoint, the degree, rank, and
///    join-bookkeeping identities hold.
VerificationReport verify_suite(const std::string& suite, int n_max, int d_max,
                                const EnumerationLimits& limits = {});

}  // namespace spheredeg
