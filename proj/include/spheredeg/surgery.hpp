#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spheredeg/filtration.hpp"
#include "spheredeg/report.hpp"
#include "spheredeg/simplicial.hpp"

namespace spheredeg {

/// A simplicial map from a combinatorial disk into a degree-filtered
/// complex, given on vertices. dim is the disk dimension (1 or 2).
struct DiskMap {
    SimplicialComplex disk;
    int dim = 1;
    DegreeFilteredComplex target;
    std::map<std::string, std::string> vertex_map;
};

/// Image of a disk face under the vertex map: mapped labels, deduplicated
/// and sorted. Throws SchemaError when a label is unmapped.
Face image_face(const DiskMap& f, const Face& face);

/// Structural checks: disk dimension in {1, 2}, disk certified a ball,
/// vertex map total into the target's labels, facet images are faces.
/// Rules: "ball-dimension", "not-a-ball", "unmapped-vertex",
/// "image-not-a-vertex", "not-simplicial".
ValidationReport validate_disk_map(const DiskMap& f);

struct BadSimplex {
    Face simplex;
    Face image;
    int deg = 0;
};

/// Interior faces of the disk whose image is a pillar face of degree
/// greater than budget, ordered by degree descending, then dimension
/// descending, then labels ascending.
std::vector<BadSimplex> bad_simplices(const DiskMap& f, int budget);

/// The descent measure (x, y, count):
///   x     = maximum image degree over all nonempty faces of the disk;
///   y     = maximum dimension of a face whose image is a pillar face of
///           degree x, or -1 when there is none (then x came only from
///           non-pillar images, possible only at the end of a descent);
///   count = number of such faces of dimension y.
/// Each surgery step strictly decreases this triple lexicographically.
std::array<long long, 3> descent_measure(const DiskMap& f);

/// How to extend a sphere map to a ball map during surgery.
///   Path:    staircase fillers for 0-spheres only;
///   Star:    cone the 1-sphere from a single target vertex;
///   Bounded: ear cuts with cone fallback, at most max_area triangles.
/// Empty spheres and 0-spheres are filled the same way under every
/// strategy; the choice matters for 1-spheres.
enum class FillStrategy { Path, Star, Bounded };

struct FillOptions {
    FillStrategy strategy = FillStrategy::Bounded;
    int max_area = 64;
};

struct FillResult {
    SimplicialComplex ball;
    /// Images for the fresh vertices introduced by the filler.
    std::map<std::string, std::string> vertex_map;
};

/// Extends the map given on a sphere (dimension -1, 0, or 1) to a ball
/// mapped into target. Fresh vertices get labels "s0", "s1", ... skipping
/// reserved ones. No nonempty face of the ball built from existing labels
/// only may lie in forbidden; faces with a fresh vertex are always new.
/// Throws FillError when no filler exists within the options.
FillResult fill_sphere_map(const SimplicialComplex& sphere, int sphere_dim,
                           const std::map<std::string, std::string>& rim_map,
                           const SimplicialComplex& target,
                           const FillOptions& options,
                           const std::set<Face>& forbidden,
                           const std::set<std::string>& reserved);

/// One surgery move: removes the open star of omega, fills the link
/// sphere through the low link of omega's image, and glues the filling
/// ball joined with the boundary of omega. omega must be a bad simplex
/// realizing the current measure (maximal degree, then dimension); the
/// result is checked to be a ball with the same boundary, simplicial,
/// and of strictly smaller measure. Throws SchemaError on a bad omega
/// and Error when a postcondition fails.
DiskMap surgery_step(const DiskMap& f, const Face& omega, int budget,
                     const FillOptions& options = {});

struct TraceEntry {
    int step = 0;
    std::array<long long, 3> measure{0, 0, 0};
    Face omega;
    Face image;
};

struct DescentResult {
    DiskMap final_map;
    std::vector<TraceEntry> trace;
    std::array<long long, 3> final_measure{0, 0, 0};
};

/// Repeats surgery_step on the first bad simplex until none remain, so
/// the final disk maps into the sublevel complex at budget. Requires a
/// valid disk map over a valid filtration whose boundary already maps
/// into that sublevel; throws SchemaError otherwise.
DescentResult surgery_descent(const DiskMap& f, int budget,
                              const FillOptions& options = {});

/// A generated disk map that violates the budget somewhere inside and
/// admits a full descent. Families, cycling with the seed: alternating
/// paths, wheels over a hot apex, two triangles sharing a hot edge, and
/// a hexagon around a hot triangle. All use additive vertex weights.
struct PlantedInstance {
    DiskMap disk_map;
    int budget = 0;
    std::string family;
};

PlantedInstance generate_planted_instance(std::uint64_t seed);

/// Runs full descents on instance_count planted instances (seeds
/// base_seed, base_seed + 1, ...) and independently rechecks every
/// postcondition on the results.
VerificationReport run_planted_descents(int instance_count,
                                        const FillOptions& options = {},
                                        std::uint64_t base_seed = 0);

}  // namespace spheredeg
