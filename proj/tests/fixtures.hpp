#pragma once

// Shared complex fixtures for the simplicial, homology, and acceptance
// suites. Values asserted against these are classical facts about the
// individual spaces, so they double as an independent check on the
// homology pipeline.

#include <string>
#include <vector>

#include "spheredeg/homology.hpp"
#include "spheredeg/simplicial.hpp"

namespace fixtures {

using spheredeg::Face;
using spheredeg::JoinInstance;
using spheredeg::SimplicialComplex;

inline SimplicialComplex point() { return SimplicialComplex::from_facets({{"pt"}}); }

inline SimplicialComplex two_points() {
    return SimplicialComplex::from_facets({{"m"}, {"p"}});
}

/// Boundary of the k-simplex on labels d0..dk: a (k-1)-sphere.
inline SimplicialComplex boundary_simplex(int k) {
    std::vector<std::string> labels;
    for (int i = 0; i <= k; ++i) labels.push_back("d" + std::to_string(i));
    std::vector<Face> facets;
    for (int skip = 0; skip <= k; ++skip) {
        Face facet;
        for (int i = 0; i <= k; ++i) {
            if (i != skip) facet.push_back(labels[i]);
        }
        facets.push_back(facet);
    }
    return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex solid_triangle() {
    return SimplicialComplex::from_facets({{"x", "y", "z"}});
}

/// Cycle with m >= 3 vertices.
inline SimplicialComplex circle(int m) {
    std::vector<Face> facets;
    for (int i = 0; i < m; ++i) {
        facets.push_back({"r" + std::to_string(i), "r" + std::to_string((i + 1) % m)});
    }
    return SimplicialComplex::from_facets(facets);
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex projective_plane() {
    return SimplicialComplex::from_facets({
        {"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
        {"1", "2", "6"}, {"2", "3", "5"}, {"3", "5", "6"}, {"3", "4", "6"},
        {"2", "4", "6"}, {"2", "4", "5"}});
}

/// 7-vertex torus: triangles (i, i+1, i+3) and (i, i+2, i+3) mod 7.
inline SimplicialComplex seven_vertex_torus() {
    std::vector<Face> facets;
    auto v = [](int i) { return "c" + std::to_string(((i % 7) + 7) % 7); };
    for (int i = 0; i < 7; ++i) {
        facets.push_back({v(i), v(i + 1), v(i + 3)});
        facets.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return SimplicialComplex::from_facets(facets);
}

/// 9-vertex torus from a 3x3 grid with diagonals.
inline SimplicialComplex grid_torus() {
    auto v = [](int i, int j) {
        return "t" + std::to_string(((i % 3) + 3) % 3) + std::to_string(((j % 3) + 3) % 3);
    };
    std::vector<Face> facets;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            facets.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            facets.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
        }
    }
    return SimplicialComplex::from_facets(facets);
}

/// Pool of join-connectivity checks; every claimed connectivity is a
/// classical value for that space. At least 20 instances.
inline std::vector<JoinInstance> join_instance_pool() {
    SimplicialComplex pt = point();
    SimplicialComplex s0 = two_points();
    SimplicialComplex s1 = boundary_simplex(2);
    SimplicialComplex c4 = circle(4);
    SimplicialComplex s2 = boundary_simplex(3);
    SimplicialComplex disk = solid_triangle();
    SimplicialComplex rp2 = projective_plane();
    SimplicialComplex torus7 = seven_vertex_torus();
    SimplicialComplex torus9 = grid_torus();

    return {
        {"s0-s0", {{s0, -1}, {s0, -1}}},
        {"s0-s1", {{s0, -1}, {s1, 0}}},
        {"s1-s1", {{s1, 0}, {c4, 0}}},
        {"s1-s2", {{s1, 0}, {s2, 1}}},
        {"s2-s2", {{s2, 1}, {s2, 1}}},
        {"s2-s0", {{s2, 1}, {s0, -1}}},
        {"point-point", {{pt, 0}, {pt, 0}}},
        {"point-s2", {{pt, 0}, {s2, 1}}},
        {"point-rp2", {{pt, 0}, {rp2, 0}}},
        {"rp2-s0", {{rp2, 0}, {s0, -1}}},
        {"rp2-s1", {{rp2, 0}, {s1, 0}}},
        {"rp2-rp2", {{rp2, 0}, {rp2, 0}}},
        {"torus7-s0", {{torus7, 0}, {s0, -1}}},
        {"torus7-s1", {{torus7, 0}, {s1, 0}}},
        {"grid-torus-s0", {{torus9, 0}, {s0, -1}}},
        {"disk-s0", {{disk, 2}, {s0, -1}}},
        {"disk-s1", {{disk, 2}, {s1, 0}}},
        {"s0-s0-s0", {{s0, -1}, {s0, -1}, {s0, -1}}},
        {"s0-s0-s1", {{s0, -1}, {s0, -1}, {s1, 0}}},
        {"s1-s1-s0", {{s1, 0}, {c4, 0}, {s0, -1}}},
        {"rp2-s0-s0", {{rp2, 0}, {s0, -1}, {s0, -1}}},
        {"point-s0-s0", {{pt, 0}, {s0, -1}, {s0, -1}}},
    };
}

}  // namespace fixtures
