#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "spheredeg/enumeration.hpp"
#include "spheredeg/errors.hpp"
#include "spheredeg/filtration.hpp"
#include "spheredeg/io.hpp"
#include "spheredeg/surgery.hpp"

using namespace spheredeg;

namespace {

GenusGraph theta() {
    return GenusGraph({{0, 0, true}, {1, 0, false}},
                      {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
}

DiskMap interval_example() {
    DiskMap f;
    f.disk = SimplicialComplex::from_facets({{"p0", "p1"}, {"p1", "p2"}});
    f.dim = 1;
    f.target = additive_weight_filtration(
        SimplicialComplex::from_facets({{"a", "b", "c"}}),
        {{"a", 0}, {"b", 1}, {"c", 0}});
    f.vertex_map = {{"p0", "a"}, {"p1", "b"}, {"p2", "c"}};
    return f;
}

}  // namespace

TEST_CASE("graph json round trip") {
    GenusGraph g = theta();
    GenusGraph back = graph_from_json(graph_to_json(g));
    CHECK(canonical_form(back) == canonical_form(g));
    CHECK(back.vertices().size() == 2);
    CHECK(back.edges().size() == 3);

    // Input defaults: genus 0, basepoint false.
    Json j = {{"vertices", {{{"id", 0}, {"basepoint", true}}, {{"id", 1}}}},
              {"edges", {{{"id", 0}, {"ends", {0, 1}}}}}};
    GenusGraph defaults = graph_from_json(j);
    CHECK(defaults.vertices()[0].genus == 0);
    CHECK(defaults.vertices()[0].basepoint);
    CHECK(defaults.vertices()[1].genus == 0);
    CHECK_FALSE(defaults.vertices()[1].basepoint);
}

TEST_CASE("graph json frozen text") {
    GenusGraph rose({{0, 1, true}}, {{0, 0, 0}});
    std::string expected =
        "{\n"
        "  \"edges\": [\n"
        "    {\n"
        "      \"ends\": [\n"
        "        0,\n"
        "        0\n"
        "      ],\n"
        "      \"id\": 0\n"
        "    }\n"
        "  ],\n"
        "  \"vertices\": [\n"
        "    {\n"
        "      \"basepoint\": true,\n"
        "      \"genus\": 1,\n"
        "      \"id\": 0\n"
        "    }\n"
        "  ]\n"
        "}";
    CHECK(graph_to_json(rose).dump(2) == expected);
}

TEST_CASE("graph json strict parsing") {
    Json good = graph_to_json(theta());

    Json missing = good;
    missing.erase("edges");
    CHECK_THROWS_AS(graph_from_json(missing), SchemaError);

    Json unknown = good;
    unknown["color"] = "red";
    CHECK_THROWS_AS(graph_from_json(unknown), SchemaError);

    Json extra_vertex_key = good;
    extra_vertex_key["vertices"][0]["weight"] = 3;
    CHECK_THROWS_AS(graph_from_json(extra_vertex_key), SchemaError);

    Json bad_ends = good;
    bad_ends["edges"][0]["ends"] = {0, 1, 2};
    CHECK_THROWS_AS(graph_from_json(bad_ends), SchemaError);

    Json bad_type = good;
    bad_type["vertices"][0]["genus"] = "one";
    CHECK_THROWS_AS(graph_from_json(bad_type), SchemaError);

    CHECK_THROWS_AS(graph_from_json(Json::array()), SchemaError);
}

TEST_CASE("complex json round trip") {
    SimplicialComplex k =
        SimplicialComplex::from_facets({{"a", "b", "c"}, {"c", "d"}});
    SimplicialComplex back = complex_from_json(complex_to_json(k));
    CHECK(back.facets() == k.facets());

    CHECK_THROWS_AS(complex_from_json(Json{{"cells", Json::array()}}),
                    SchemaError);
    CHECK_THROWS_AS(complex_from_json(Json{{"facets", {{1, 2}}}}), SchemaError);
}

TEST_CASE("homology json round trip") {
    HomologyProfile profile;
    profile.dims.push_back({0, {}});
    profile.dims.push_back({2, {2, 6}});
    HomologyProfile back = homology_from_json(homology_to_json(profile));
    CHECK(back == profile);

    // Index entries must appear in order 0, 1, ...
    Json shuffled = homology_to_json(profile);
    shuffled["dims"][1]["i"] = 5;
    CHECK_THROWS_AS(homology_from_json(shuffled), SchemaError);
}

TEST_CASE("filtration json round trip") {
    auto f = DegreeFilteredComplex::from_graph(theta());
    auto back = filtration_from_json(filtration_to_json(f));
    CHECK(back.complex().facets() == f.complex().facets());
    for (const auto& [face, value] : f.degrees()) {
        CHECK(back.deg(face) == value);
    }

    Json partial = filtration_to_json(f);
    partial["deg"].erase(0);
    CHECK_THROWS_AS(filtration_from_json(partial), SchemaError);
}

TEST_CASE("disk map json round trip") {
    DiskMap f = interval_example();
    DiskMap back = disk_map_from_json(disk_map_to_json(f));
    CHECK(back.disk.facets() == f.disk.facets());
    CHECK(back.dim == f.dim);
    CHECK(back.vertex_map == f.vertex_map);
    CHECK(back.target.degrees() == f.target.degrees());
    CHECK(validate_disk_map(back).ok());
}

TEST_CASE("trace json round trip from a real descent") {
    DescentResult result = surgery_descent(interval_example(), 0);
    REQUIRE(result.trace.size() == 1);
    std::vector<TraceEntry> back = trace_from_json(trace_to_json(result.trace));
    REQUIRE(back.size() == result.trace.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].step == result.trace[i].step);
        CHECK(back[i].measure == result.trace[i].measure);
        CHECK(back[i].omega == result.trace[i].omega);
        CHECK(back[i].image == result.trace[i].image);
    }

    Json bad = trace_to_json(result.trace);
    bad[0]["measure"] = {1, 0};
    CHECK_THROWS_AS(trace_from_json(bad), SchemaError);
}

TEST_CASE("validation and verification reports as json") {
    GenusGraph no_basepoint({{0, 0, false}, {1, 0, false}},
                            {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
    Json v = validation_to_json(validate_graph(no_basepoint));
    CHECK_FALSE(v.at("ok").get<bool>());
    CHECK(v.at("violations")[0].at("rule") == "basepoint-count");

    VerificationReport report;
    report.suite = "collapse-lemma";
    report.instances_checked = 10;
    report.checks_performed = 40;
    Json r = report_to_json(report);
    CHECK(r.at("pass").get<bool>());
    CHECK(r.at("suite") == "collapse-lemma");
    // Timing never lands in artifacts; exactly the five stable keys.
    CHECK(r.size() == 5);
    CHECK_FALSE(r.contains("duration"));
    CHECK_FALSE(r.contains("duration_ms"));
}

TEST_CASE("census json and csv") {
    EnumerationRequest request;
    request.n = 2;
    request.max_degree = 1;
    std::vector<GenusGraph> graphs = enumerate_types(request);
    REQUIRE(graphs.size() == 7);

    Json j = census_to_json(2, 1, graphs);
    CHECK(j.at("summary").at("n") == 2);
    CHECK(j.at("summary").at("d") == 1);
    CHECK(j.at("summary").at("count") == 7);
    CHECK(j.at("graphs").size() == 7);
    CHECK(canonical_form(graph_from_json(j.at("graphs")[0])) ==
          canonical_form(graphs[0]));

    std::string expected =
        "n,d,dim,degree,count\n"
        "2,1,0,0,1\n"
        "2,1,0,1,1\n"
        "2,1,1,0,1\n"
        "2,1,1,1,2\n"
        "2,1,2,1,2\n";
    CHECK(census_to_csv(2, 1, graphs) == expected);
}

TEST_CASE("graph to dot frozen text") {
    std::string expected =
        "graph genus_graph {\n"
        "  v0 [label=\"g=0\", shape=doublecircle];\n"
        "  v1 [label=\"g=0\", shape=circle];\n"
        "  v0 -- v1;\n"
        "  v0 -- v1;\n"
        "  v0 -- v1;\n"
        "}\n";
    CHECK(graph_to_dot(theta()) == expected);
}

TEST_CASE("file io round trip and failures") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "spheredeg_io_test";
    fs::create_directories(dir);
    fs::path path = dir / "graph.json";

    write_json_file(path.string(), graph_to_json(theta()));
    std::string text = read_text_file(path.string());
    CHECK(text.back() == '\n');
    GenusGraph back = graph_from_json(read_json_file(path.string()));
    CHECK(canonical_form(back) == canonical_form(theta()));
    // The temporary used for the atomic rename must not linger.
    CHECK_FALSE(fs::exists(path.string() + ".tmp"));

    CHECK_THROWS_AS(read_text_file((dir / "absent.json").string()), IoError);
    CHECK_THROWS_AS(
        write_text_file((dir / "no_such_dir" / "x.json").string(), "x"),
        IoError);

    fs::path junk = dir / "junk.json";
    write_text_file(junk.string(), "{not json");
    CHECK_THROWS_AS(read_json_file(junk.string()), SchemaError);

    fs::remove_all(dir);
}
