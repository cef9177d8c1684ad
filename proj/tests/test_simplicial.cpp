#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "spheredeg/errors.hpp"
#include "spheredeg/simplicial.hpp"

using namespace spheredeg;

TEST_CASE("from_facets rejects malformed input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({}), SchemaError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{"a"}, {}}), SchemaError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{"a", "a"}}), SchemaError);
}

TEST_CASE("facets absorb their own faces and deduplicate") {
    auto k = SimplicialComplex::from_facets({{"b", "a"}, {"a", "b", "c"}, {"c", "a", "b"}});
    REQUIRE(k.facet_count() == 1);
    CHECK(k.facets().front() == Face{"a", "b", "c"});
    CHECK(k.dim() == 2);
    CHECK(k.labels() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("face queries work on the tetrahedron boundary") {
    auto k = fixtures::boundary_simplex(3);
    CHECK(k.dim() == 2);
    CHECK(k.vertex_count() == 4);
    CHECK(k.facet_count() == 4);
    CHECK(k.faces_of_dim(0).size() == 4);
    CHECK(k.faces_of_dim(1).size() == 6);
    CHECK(k.faces_of_dim(2).size() == 4);
    CHECK(k.faces_of_dim(3).empty());
    CHECK(k.face_count() == 14);
    CHECK(k.has_face({"d0"}));
    CHECK(k.has_face({"d2", "d0"}));
    CHECK_FALSE(k.has_face({"d0", "d1", "d2", "d3"}));
    CHECK_FALSE(k.has_face({"q"}));
    CHECK(k.has_face({}));  // the empty face belongs to any nonempty complex
    CHECK_THROWS_AS(k.has_face({"d0", "d0"}), SchemaError);
}

TEST_CASE("face cap limits enumeration") {
    auto k = fixtures::boundary_simplex(3);
    CHECK_THROWS_AS(k.all_faces(5), ResourceLimitError);
    CHECK(k.all_faces(14).size() == 14);
}

TEST_CASE("link star and open star removal on the tetrahedron boundary") {
    auto k = fixtures::boundary_simplex(3);

    auto vertex_link = link(k, {"d0"});
    CHECK_FALSE(vertex_link == fixtures::boundary_simplex(2));  // labels differ
    CHECK(vertex_link.facet_count() == 3);
    CHECK(is_combinatorial_sphere(vertex_link, 1) == Recognition::Yes);

    auto edge_link = link(k, {"d0", "d1"});
    CHECK(edge_link.facets() == std::vector<Face>{{"d2"}, {"d3"}});

    auto closed_star = star(k, {"d0"});
    CHECK(closed_star.facet_count() == 3);
    for (const auto& facet : closed_star.facets()) {
        CHECK(std::find(facet.begin(), facet.end(), "d0") != facet.end());
    }

    auto rest = remove_open_star(k, {"d0"});
    CHECK(rest.facets() == std::vector<Face>{{"d1", "d2", "d3"}});
    CHECK(is_combinatorial_ball(rest, 2) == Recognition::Yes);

    CHECK(link(k, {}) == k);
    CHECK_THROWS_AS(link(k, {"q"}), FaceNotInComplexError);
    CHECK_THROWS_AS(star(k, {"q"}), FaceNotInComplexError);
    CHECK_THROWS_AS(remove_open_star(k, {"q"}), FaceNotInComplexError);
}

TEST_CASE("open star removal keeps lower faces of removed facets") {
    // Removing the open star of an interior edge of two glued triangles
    // keeps all four boundary edges.
    auto k = SimplicialComplex::from_facets({{"a", "b", "c"}, {"b", "c", "d"}});
    auto rest = remove_open_star(k, {"b", "c"});
    CHECK(rest.facets() == std::vector<Face>{{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    CHECK(is_combinatorial_sphere(rest, 1) == Recognition::Yes);
}

TEST_CASE("cone adds a fresh apex") {
    auto segment = cone(fixtures::two_points(), "apex");
    CHECK(segment.facets() == std::vector<Face>{{"apex", "m"}, {"apex", "p"}});
    CHECK(is_combinatorial_ball(segment, 1) == Recognition::Yes);

    auto single = cone(SimplicialComplex(), "apex");
    CHECK(single.facets() == std::vector<Face>{{"apex"}});

    CHECK_THROWS_AS(cone(segment, "apex"), LabelCollisionError);
}

TEST_CASE("join of spheres is a sphere") {
    auto square = join(fixtures::two_points(),
                       SimplicialComplex::from_facets({{"u"}, {"v"}}));
    CHECK(square.facet_count() == 4);
    CHECK(is_combinatorial_sphere(square, 1) == Recognition::Yes);

    auto s2 = join(square, SimplicialComplex::from_facets({{"w0"}, {"w1"}}));
    CHECK(is_combinatorial_sphere(s2, 2) == Recognition::Yes);

    CHECK(join(SimplicialComplex(), square) == square);
    CHECK(join(square, SimplicialComplex()) == square);
    CHECK_THROWS_AS(join(square, fixtures::two_points()), LabelCollisionError);
}

TEST_CASE("barycentric subdivision preserves shape invariants") {
    auto hexagon = barycentric_subdivision(fixtures::boundary_simplex(2));
    CHECK(hexagon.vertex_count() == 6);
    CHECK(hexagon.facet_count() == 6);
    CHECK(is_combinatorial_sphere(hexagon, 1) == Recognition::Yes);

    auto divided_disk = barycentric_subdivision(fixtures::solid_triangle());
    CHECK(divided_disk.vertex_count() == 7);
    CHECK(divided_disk.facet_count() == 6);
    CHECK(is_combinatorial_ball(divided_disk, 2) == Recognition::Yes);
    CHECK(euler_characteristic(divided_disk) == 1);

    auto divided_sphere = barycentric_subdivision(fixtures::boundary_simplex(3));
    CHECK(is_combinatorial_sphere(divided_sphere, 2) == Recognition::Yes);
    CHECK(euler_characteristic(divided_sphere) == 2);

    CHECK_THROWS_AS(barycentric_subdivision(SimplicialComplex::from_facets({{"a|b"}})),
                    LabelCollisionError);
}

TEST_CASE("connectivity and purity checks") {
    auto k = SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}});
    CHECK_FALSE(is_connected_complex(k));
    CHECK(is_connected_complex(fixtures::boundary_simplex(2)));
    CHECK_FALSE(is_connected_complex(SimplicialComplex()));
    CHECK(is_pure(k, 1));
    CHECK_FALSE(is_pure(SimplicialComplex::from_facets({{"a", "b"}, {"c"}}), 1));
}

TEST_CASE("boundary complex extraction") {
    auto rim = boundary_complex(fixtures::solid_triangle(), 2);
    CHECK(is_combinatorial_sphere(rim, 1) == Recognition::Yes);
    CHECK(rim.facet_count() == 3);

    auto path = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
    auto ends = boundary_complex(path, 1);
    CHECK(ends.facets() == std::vector<Face>{{"a"}, {"c"}});

    CHECK(boundary_complex(fixtures::seven_vertex_torus(), 2).empty());
    CHECK(boundary_complex(fixtures::point(), 0).empty());
    CHECK_THROWS_AS(boundary_complex(SimplicialComplex::from_facets({{"a", "b"}, {"c"}}), 1),
                    Error);
}

TEST_CASE("sphere recognition certifies small dimensions") {
    CHECK(is_combinatorial_sphere(SimplicialComplex(), -1) == Recognition::Yes);
    CHECK(is_combinatorial_sphere(fixtures::point(), -1) == Recognition::No);
    CHECK(is_combinatorial_sphere(fixtures::two_points(), 0) == Recognition::Yes);
    CHECK(is_combinatorial_sphere(fixtures::point(), 0) == Recognition::No);
    CHECK(is_combinatorial_sphere(fixtures::boundary_simplex(2), 1) == Recognition::Yes);
    CHECK(is_combinatorial_sphere(fixtures::circle(17), 1) == Recognition::Yes);
    CHECK(is_combinatorial_sphere(fixtures::boundary_simplex(3), 2) == Recognition::Yes);

    auto path = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
    CHECK(is_combinatorial_sphere(path, 1) == Recognition::No);
    CHECK(is_combinatorial_sphere(fixtures::boundary_simplex(2), 2) == Recognition::No);
    CHECK(is_combinatorial_sphere(fixtures::projective_plane(), 2) == Recognition::No);
    CHECK(is_combinatorial_sphere(fixtures::seven_vertex_torus(), 2) == Recognition::No);

    // Two disjoint circles: pure, every vertex valence 2, but disconnected.
    auto pair = SimplicialComplex::from_facets(
        {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"x", "y"}, {"y", "z"}, {"x", "z"}});
    CHECK(is_combinatorial_sphere(pair, 1) == Recognition::No);
}

TEST_CASE("ball recognition certifies small dimensions") {
    CHECK(is_combinatorial_ball(fixtures::point(), 0) == Recognition::Yes);
    CHECK(is_combinatorial_ball(fixtures::two_points(), 0) == Recognition::No);

    auto path = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
    CHECK(is_combinatorial_ball(path, 1) == Recognition::Yes);
    CHECK(is_combinatorial_ball(fixtures::circle(4), 1) == Recognition::No);
    auto fork = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"b", "d"}});
    CHECK(is_combinatorial_ball(fork, 1) == Recognition::No);

    CHECK(is_combinatorial_ball(fixtures::solid_triangle(), 2) == Recognition::Yes);
    auto fan = SimplicialComplex::from_facets({{"o", "a", "b"}, {"o", "b", "c"}});
    CHECK(is_combinatorial_ball(fan, 2) == Recognition::Yes);
    CHECK(is_combinatorial_ball(fixtures::boundary_simplex(3), 2) == Recognition::No);
    CHECK(is_combinatorial_ball(fixtures::projective_plane(), 2) == Recognition::No);

    // Two triangles glued along a vertex: links fail there.
    auto wedge = SimplicialComplex::from_facets({{"o", "a", "b"}, {"o", "c", "d"}});
    CHECK(is_combinatorial_ball(wedge, 2) == Recognition::No);
}

TEST_CASE("recognition above dimension two is a tri-state") {
    CHECK(is_combinatorial_sphere(fixtures::boundary_simplex(4), 3) ==
          Recognition::Unverified);
    CHECK(is_combinatorial_sphere(fixtures::boundary_simplex(5), 4) ==
          Recognition::Unverified);
    auto solid = SimplicialComplex::from_facets({{"a", "b", "c", "d"}});
    CHECK(is_combinatorial_ball(solid, 3) == Recognition::Unverified);
    CHECK(is_combinatorial_sphere(solid, 3) == Recognition::No);  // open ridges
    CHECK(is_combinatorial_ball(fixtures::boundary_simplex(4), 3) == Recognition::No);
}
