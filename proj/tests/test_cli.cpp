#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "spheredeg/cli.hpp"
#include "spheredeg/errors.hpp"
#include "spheredeg/filtration.hpp"
#include "spheredeg/surgery.hpp"

using namespace spheredeg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "spheredeg_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
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

DiskMap wheel_example() {
    DiskMap f;
    f.disk = SimplicialComplex::from_facets({{"q", "c0", "c1"},
                                             {"q", "c1", "c2"},
                                             {"q", "c2", "c3"},
                                             {"q", "c0", "c3"}});
    f.dim = 2;
    f.target = additive_weight_filtration(
        SimplicialComplex::from_facets({{"h", "u", "z"}}),
        {{"h", 1}, {"u", 0}, {"z", 0}});
    f.vertex_map = {
        {"q", "h"}, {"c0", "u"}, {"c1", "u"}, {"c2", "u"}, {"c3", "u"}};
    return f;
}

}  // namespace

TEST_CASE("enumerate writes a census and repeats byte for byte") {
    fs::path dir = scratch("enumerate");
    CommandConfig config;
    config.subcommand = "enumerate";
    config.n = 1;
    config.max_degree = 1;
    config.output_path = (dir / "census.json").string();

    RunReport first = run(config);
    CHECK(first.exit_code == 0);
    // The boundary-parallel rule excludes the lone-handle companion type,
    // leaving just the loop rose at n = 1, d <= 1.
    CHECK(first.summary.at("count") == 1);
    CHECK(first.summary.at("subcommand") == "enumerate");
    CHECK(first.summary.at("artifacts")[0] == config.output_path);
    std::string bytes = read_text_file(config.output_path);

    RunReport second = run(config);
    CHECK(second.exit_code == 0);
    CHECK(read_text_file(config.output_path) == bytes);
    CHECK(second.summary.dump(2) == first.summary.dump(2));
}

TEST_CASE("enumerate csv format freezes the census table") {
    fs::path dir = scratch("enumerate_csv");
    CommandConfig config;
    config.subcommand = "enumerate";
    config.n = 2;
    config.max_degree = 1;
    config.format = "csv";
    config.output_path = (dir / "census.csv").string();

    RunReport report = run(config);
    CHECK(report.exit_code == 0);
    CHECK(report.summary.at("count") == 7);
    CHECK(read_text_file(config.output_path) ==
          "n,d,dim,degree,count\n"
          "2,1,0,0,1\n"
          "2,1,0,1,1\n"
          "2,1,1,0,1\n"
          "2,1,1,1,2\n"
          "2,1,2,1,2\n");
}

TEST_CASE("enumerate usage and resource errors") {
    CommandConfig config;
    config.subcommand = "enumerate";
    config.n = 1;
    config.max_degree = 1;
    CHECK(run(config).exit_code == 2);  // missing --out

    config.output_path =
        (scratch("enumerate_caps") / "census.json").string();
    config.n = 9;
    config.max_degree = 4;  // n + d over the sweep cap
    RunReport capped = run(config);
    CHECK(capped.exit_code == 3);
    CHECK(capped.summary.at("error").at("kind") == "resource-limit");
    CHECK(capped.summary.at("artifacts").empty());

    config.n = 1;
    config.format = "dot";
    RunReport bad_format = run(config);
    CHECK(bad_format.exit_code == 2);
    CHECK(bad_format.summary.at("error").at("kind") == "schema-error");
}

TEST_CASE("verify runs a suite and reports through the summary") {
    fs::path dir = scratch("verify");
    CommandConfig config;
    config.subcommand = "verify";
    config.suite = "degree-zero-roses";
    config.n_max = 3;
    config.d_max = 0;
    config.output_path = (dir / "report.json").string();

    RunReport report = run(config);
    CHECK(report.exit_code == 0);
    CHECK(report.summary.at("report").at("pass") == true);
    CHECK(report.summary.at("report").at("suite") == "degree-zero-roses");
    Json on_disk = read_json_file(config.output_path);
    CHECK(on_disk == report.summary.at("report"));

    config.suite = "no-such-suite";
    RunReport unknown = run(config);
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.summary.at("error").at("kind") == "schema-error");
}

TEST_CASE("homology reads a complex file and names the torsion") {
    fs::path dir = scratch("homology");
    CommandConfig config;
    config.subcommand = "homology";
    config.input_path = (dir / "rp2.json").string();
    write_json_file(config.input_path,
                    complex_to_json(fixtures::projective_plane()));

    RunReport report = run(config);
    CHECK(report.exit_code == 0);
    const Json& dims = report.summary.at("result").at("dims");
    REQUIRE(dims.size() == 3);
    CHECK(dims[1].at("rank") == 0);
    CHECK(dims[1].at("torsion") == Json::array({2}));

    config.output_path = (dir / "profile.json").string();
    RunReport to_file = run(config);
    CHECK(to_file.exit_code == 0);
    CHECK_FALSE(to_file.summary.contains("result"));
    CHECK(read_json_file(config.output_path) ==
          report.summary.at("result"));

    config.input_path = (dir / "missing.json").string();
    RunReport missing = run(config);
    CHECK(missing.exit_code == 2);
    CHECK(missing.summary.at("error").at("kind") == "io-error");
}

TEST_CASE("surgery descends a disk map file") {
    fs::path dir = scratch("surgery");
    CommandConfig config;
    config.subcommand = "surgery";
    config.input_path = (dir / "interval.json").string();
    config.budget = 0;
    config.output_path = (dir / "result.json").string();
    write_json_file(config.input_path, disk_map_to_json(interval_example()));

    RunReport report = run(config);
    CHECK(report.exit_code == 0);
    CHECK(report.summary.at("steps") == 1);
    CHECK(report.summary.at("final_measure") == Json::array({0, -1, 0}));

    Json result = read_json_file(config.output_path);
    DiskMap final_map = disk_map_from_json(result.at("final"));
    CHECK(final_map.disk.facets() ==
          std::vector<Face>{{"p0", "p2"}});
    CHECK(trace_from_json(result.at("trace")).size() == 1);
}

TEST_CASE("surgery reports a fill failure with the witness") {
    fs::path dir = scratch("surgery_fill");
    CommandConfig config;
    config.subcommand = "surgery";
    config.input_path = (dir / "wheel.json").string();
    config.budget = 0;
    config.strategy = "path";
    write_json_file(config.input_path, disk_map_to_json(wheel_example()));

    RunReport report = run(config);
    CHECK(report.exit_code == 1);
    CHECK(report.summary.at("error").at("kind") == "fill-failure");
    std::string what = report.summary.at("error").at("what");
    CHECK(what.find("cannot fill around {q}") != std::string::npos);

    config.strategy = "star";
    config.output_path = (dir / "result.json").string();
    RunReport star = run(config);
    CHECK(star.exit_code == 0);
    CHECK(star.summary.at("steps") == 1);
}

TEST_CASE("surgery planted mode verifies seeded instances") {
    CommandConfig config;
    config.subcommand = "surgery";
    config.planted = 5;

    RunReport report = run(config);
    CHECK(report.exit_code == 0);
    CHECK(report.summary.at("report").at("pass") == true);
    CHECK(report.summary.at("report").at("instances_checked") == 5);

    config.seed = 4;  // same families, shifted window
    RunReport shifted = run(config);
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.summary.at("report").at("counterexamples") ==
          Json::array());

    config.planted = 0;
    config.input_path.clear();
    RunReport neither = run(config);
    CHECK(neither.exit_code == 2);  // neither --in nor --planted
}

TEST_CASE("export recognizes artifacts and converts formats") {
    fs::path dir = scratch("export");
    GenusGraph theta({{0, 0, true}, {1, 0, false}},
                     {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
    std::string graph_path = (dir / "theta.json").string();
    write_json_file(graph_path, graph_to_json(theta));

    CommandConfig config;
    config.subcommand = "export";
    config.input_path = graph_path;
    config.format = "dot";
    config.output_path = (dir / "theta.dot").string();
    RunReport dot = run(config);
    CHECK(dot.exit_code == 0);
    CHECK(dot.summary.at("kind") == "graph");
    CHECK(read_text_file(config.output_path) == graph_to_dot(theta));

    // json -> json is the identity on canonically written files
    config.format = "json";
    config.output_path = (dir / "theta_copy.json").string();
    CHECK(run(config).exit_code == 0);
    CHECK(read_text_file(config.output_path) == read_text_file(graph_path));

    // census -> csv
    CommandConfig census;
    census.subcommand = "enumerate";
    census.n = 2;
    census.max_degree = 1;
    census.output_path = (dir / "census.json").string();
    REQUIRE(run(census).exit_code == 0);
    config.input_path = census.output_path;
    config.format = "csv";
    config.output_path = (dir / "census.csv").string();
    RunReport csv = run(config);
    CHECK(csv.exit_code == 0);
    CHECK(csv.summary.at("kind") == "census");
    CHECK(read_text_file(config.output_path).rfind("n,d,dim,degree,count\n",
                                                   0) == 0);

    // dot only makes sense for graphs
    config.input_path = graph_path;
    config.format = "csv";
    config.output_path = (dir / "bad.csv").string();
    RunReport mismatch = run(config);
    CHECK(mismatch.exit_code == 2);
    CHECK(mismatch.summary.at("error").at("kind") == "schema-error");

    // malformed input fails before writing anything
    std::string junk_path = (dir / "junk.json").string();
    write_text_file(junk_path, "{\"vertices\": [], \"edges\": [], \"x\": 1}");
    config.input_path = junk_path;
    config.format = "json";
    config.output_path = (dir / "junk_out.json").string();
    RunReport junk = run(config);
    CHECK(junk.exit_code == 2);
    CHECK_FALSE(fs::exists(config.output_path));
}

TEST_CASE("unknown subcommand is a usage error") {
    CommandConfig config;
    config.subcommand = "frobnicate";
    RunReport report = run(config);
    CHECK(report.exit_code == 2);
    CHECK(report.summary.at("error").at("kind") == "schema-error");
    CHECK(report.summary.at("subcommand") == "frobnicate");
    CHECK(report.summary.at("artifacts").empty());
}
