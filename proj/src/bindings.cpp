#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spheredeg/cli.hpp"
#include "spheredeg/enumeration.hpp"
#include "spheredeg/errors.hpp"
#include "spheredeg/filtration.hpp"
#include "spheredeg/genus_graph.hpp"
#include "spheredeg/homology.hpp"
#include "spheredeg/io.hpp"
#include "spheredeg/simplicial.hpp"
#include "spheredeg/surgery.hpp"

namespace py = pybind11;
using namespace spheredeg;

namespace {

std::string vertex_repr(const GraphVertex& v) {
    std::ostringstream out;
    out << "GraphVertex(id=" << v.id << ", genus=" << v.genus
        << ", basepoint=" << (v.basepoint ? "True" : "False") << ")";
    return out.str();
}

std::string edge_repr(const GraphEdge& e) {
    std::ostringstream out;
    out << "GraphEdge(id=" << e.id << ", ends=(" << e.end_a << ", " << e.end_b
        << "))";
    return out.str();
}

std::vector<std::pair<int, std::vector<long long>>> profile_rows(
    const HomologyProfile& profile) {
    std::vector<std::pair<int, std::vector<long long>>> rows;
    for (const auto& dim : profile.dims) rows.push_back({dim.rank, dim.torsion});
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Degree toolkit for genus-labeled sphere system graphs: type "
        "enumeration, collapse and pillar operations, exact simplicial "
        "homology, degree filtrations, and the degree-lowering surgery "
        "descent.";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidGraphError>(m, "InvalidGraphError",
                                              error.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", error.ptr());
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                               error.ptr());
    py::register_exception<FaceNotInComplexError>(m, "FaceNotInComplexError",
                                                  error.ptr());
    py::register_exception<NotAPillarError>(m, "NotAPillarError", error.ptr());
    py::register_exception<FillError>(m, "FillError", error.ptr());
    py::register_exception<IoError>(m, "IoError", error.ptr());

    py::class_<GraphVertex>(m, "GraphVertex")
        .def(py::init([](int id, int genus, bool basepoint) {
                 return GraphVertex{id, genus, basepoint};
             }),
             py::arg("id"), py::arg("genus") = 0, py::arg("basepoint") = false)
        .def_readwrite("id", &GraphVertex::id)
        .def_readwrite("genus", &GraphVertex::genus)
        .def_readwrite("basepoint", &GraphVertex::basepoint)
        .def("__repr__", &vertex_repr);

    py::class_<GraphEdge>(m, "GraphEdge")
        .def(py::init([](int id, int end_a, int end_b) {
                 return GraphEdge{id, end_a, end_b};
             }),
             py::arg("id"), py::arg("end_a"), py::arg("end_b"))
        .def_readwrite("id", &GraphEdge::id)
        .def_readwrite("end_a", &GraphEdge::end_a)
        .def_readwrite("end_b", &GraphEdge::end_b)
        .def("is_loop", &GraphEdge::is_loop)
        .def("__repr__", &edge_repr);

    py::class_<GenusGraph>(m, "GenusGraph")
        .def(py::init<>())
        .def(py::init<std::vector<GraphVertex>, std::vector<GraphEdge>>(),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &GenusGraph::vertices)
        .def_property_readonly("edges", &GenusGraph::edges)
        .def("basepoint_id",
             [](const GenusGraph& g) { return g.basepoint_id(); })
        .def("__eq__", [](const GenusGraph& a,
                          const GenusGraph& b) { return a == b; })
        .def("__repr__", [](const GenusGraph& g) {
            return "GenusGraph(" + canonical_form(g) + ")";
        });

    m.def("make_rose", &make_rose, py::arg("basepoint_genus"),
          py::arg("loops"), "Basepoint with the given genus and loop count");
    m.def("validate_graph",
          [](const GenusGraph& g) {
              std::vector<std::pair<std::string, std::string>> rows;
              for (const auto& v : validate_graph(g).violations) {
                  rows.push_back({v.rule, v.detail});
              }
              return rows;
          },
          py::arg("graph"),
          "All violated validity rules as (rule, detail) pairs");
    m.def("degree", &degree, py::arg("graph"),
          "Sum over non-basepoint vertices of valence + 2 genus - 2");
    m.def("graph_stats",
          [](const GenusGraph& g) {
              GraphStats stats = graph_stats(g);
              py::dict out;
              out["valences"] = stats.valences;
              out["rank_pi1"] = stats.rank_pi1;
              out["total_genus"] = stats.total_genus;
              out["n"] = stats.n;
              out["dim"] = stats.dim;
              return out;
          },
          py::arg("graph"));
    m.def("collapse_edge", &collapse_edge, py::arg("graph"),
          py::arg("edge_id"), "Collapse one edge; loops add genus");
    m.def("pillar_edges", &pillar_edges, py::arg("graph"),
          "Ids of non-loop edges at the basepoint");
    m.def("is_pillar", &is_pillar, py::arg("graph"));
    m.def("pillar_graph", &pillar_graph, py::arg("graph"),
          "Collapse non-pillar edges until only pillar edges remain");
    m.def("canonical_form", &canonical_form, py::arg("graph"),
          "Isomorphism-type key; equal forms mean isomorphic graphs");
    m.def("graph_from_canonical", &graph_from_canonical, py::arg("form"));
    m.def(
        "enumerate_types",
        [](int n, int max_degree, bool include_empty, bool override_caps) {
            EnumerationRequest request;
            request.n = n;
            request.max_degree = max_degree;
            request.include_empty = include_empty;
            EnumerationLimits limits;
            limits.override_caps = override_caps;
            return enumerate_types(request, limits);
        },
        py::arg("n"), py::arg("max_degree"), py::arg("include_empty") = false,
        py::arg("override_caps") = false,
        "One representative per isomorphism type with the given invariant "
        "n and degree bound");

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("suite", &VerificationReport::suite)
        .def_readonly("instances_checked",
                      &VerificationReport::instances_checked)
        .def_readonly("checks_performed",
                      &VerificationReport::checks_performed)
        .def_readonly("counterexamples", &VerificationReport::counterexamples)
        .def_property_readonly("passed", &VerificationReport::pass)
        .def("__repr__", [](const VerificationReport& r) {
            return "VerificationReport(suite='" + r.suite + "', passed=" +
                   (r.pass() ? "True" : "False") + ")";
        });

    m.def("verify_suite_names", &verify_suite_names);
    m.def(
        "verify_suite",
        [](const std::string& suite, int n_max, int d_max,
           bool override_caps) {
            EnumerationLimits limits;
            limits.override_caps = override_caps;
            return verify_suite(suite, n_max, d_max, limits);
        },
        py::arg("suite"), py::arg("n_max"), py::arg("d_max"),
        py::arg("override_caps") = false,
        "Run one exhaustive verification sweep over enumerated types");

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init<>())
        .def_static("from_facets", &SimplicialComplex::from_facets,
                    py::arg("facets"))
        .def("empty", &SimplicialComplex::empty)
        .def("dim", &SimplicialComplex::dim)
        .def_property_readonly("facets", &SimplicialComplex::facets)
        .def_property_readonly("labels", &SimplicialComplex::labels)
        .def("facet_count", &SimplicialComplex::facet_count)
        .def("vertex_count", &SimplicialComplex::vertex_count)
        .def("has_face", &SimplicialComplex::has_face, py::arg("face"))
        .def("faces_of_dim", &SimplicialComplex::faces_of_dim, py::arg("p"))
        .def("all_faces", &SimplicialComplex::all_faces,
             py::arg("face_cap") = 200000)
        .def("__eq__", [](const SimplicialComplex& a,
                          const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& k) {
            return "SimplicialComplex(dim=" + std::to_string(k.dim()) +
                   ", facets=" + std::to_string(k.facet_count()) + ")";
        });

    m.def("link", &spheredeg::link, py::arg("complex"), py::arg("face"));
    m.def("star", &spheredeg::star, py::arg("complex"), py::arg("face"));
    m.def("remove_open_star", &remove_open_star, py::arg("complex"),
          py::arg("face"));
    m.def("cone", &cone, py::arg("complex"), py::arg("apex"));
    m.def("join_complexes", &join, py::arg("a"), py::arg("b"));
    m.def("barycentric_subdivision", &barycentric_subdivision,
          py::arg("complex"));
    m.def("boundary_complex", &boundary_complex, py::arg("complex"),
          py::arg("d"));
    m.def("is_connected_complex", &is_connected_complex, py::arg("complex"));

    py::enum_<Recognition>(m, "Recognition")
        .value("No", Recognition::No)
        .value("Yes", Recognition::Yes)
        .value("Unverified", Recognition::Unverified);

    m.def("is_combinatorial_sphere", &is_combinatorial_sphere,
          py::arg("complex"), py::arg("d"));
    m.def("is_combinatorial_ball", &is_combinatorial_ball, py::arg("complex"),
          py::arg("d"));

    m.def("reduced_homology",
          [](const SimplicialComplex& k, std::size_t face_cap) {
              return profile_rows(reduced_homology(k, face_cap));
          },
          py::arg("complex"), py::arg("face_cap") = 200000,
          "Reduced integral homology as a list of (rank, torsion) pairs "
          "for dimensions 0..dim");
    m.def("is_homologically_k_connected",
          [](const SimplicialComplex& k, int connectivity,
             std::size_t face_cap) {
              return is_homologically_k_connected(k, connectivity, face_cap);
          },
          py::arg("complex"), py::arg("connectivity"),
          py::arg("face_cap") = 200000);

    py::class_<DegreeFilteredComplex>(m, "DegreeFilteredComplex")
        .def(py::init<>())
        .def_static("from_faces", &DegreeFilteredComplex::from_faces,
                    py::arg("complex"), py::arg("degrees"),
                    py::arg("face_cap") = 200000)
        .def_static("from_graph", &DegreeFilteredComplex::from_graph,
                    py::arg("graph"))
        .def_property_readonly("complex", &DegreeFilteredComplex::complex)
        .def_property_readonly("degrees", &DegreeFilteredComplex::degrees)
        .def("deg", &DegreeFilteredComplex::deg, py::arg("face"))
        .def("sublevel", &DegreeFilteredComplex::sublevel, py::arg("bound"))
        .def("__repr__", [](const DegreeFilteredComplex& f) {
            return "DegreeFilteredComplex(faces=" +
                   std::to_string(f.degrees().size()) + ")";
        });

    m.def("additive_weight_filtration", &additive_weight_filtration,
          py::arg("complex"), py::arg("weights"),
          "deg(face) = sum of vertex weights; satisfies both axioms");
    m.def("validate_filtration",
          [](const DegreeFilteredComplex& f) {
              std::vector<std::pair<std::string, std::string>> rows;
              for (const auto& v : validate_filtration(f).violations) {
                  rows.push_back({v.rule, v.detail});
              }
              return rows;
          },
          py::arg("filtration"));
    m.def("derived_pillar", &derived_pillar, py::arg("filtration"),
          py::arg("face"),
          "Vertices whose removal strictly lowers the degree");
    m.def("is_pillar_face", &is_pillar_face, py::arg("filtration"),
          py::arg("face"));
    m.def("low_link", &low_link, py::arg("filtration"), py::arg("pillar"),
          "Faces of the link that keep the pillar's degree");

    py::class_<DiskMap>(m, "DiskMap")
        .def(py::init<>())
        .def(py::init([](SimplicialComplex disk, int dim,
                         DegreeFilteredComplex target,
                         std::map<std::string, std::string> vertex_map) {
                 DiskMap f;
                 f.disk = std::move(disk);
                 f.dim = dim;
                 f.target = std::move(target);
                 f.vertex_map = std::move(vertex_map);
                 return f;
             }),
             py::arg("disk"), py::arg("dim"), py::arg("target"),
             py::arg("vertex_map"))
        .def_readwrite("disk", &DiskMap::disk)
        .def_readwrite("dim", &DiskMap::dim)
        .def_readwrite("target", &DiskMap::target)
        .def_readwrite("vertex_map", &DiskMap::vertex_map)
        .def("__repr__", [](const DiskMap& f) {
            return "DiskMap(dim=" + std::to_string(f.dim) + ", facets=" +
                   std::to_string(f.disk.facet_count()) + ")";
        });

    m.def("image_face", &image_face, py::arg("disk_map"), py::arg("face"));
    m.def("validate_disk_map",
          [](const DiskMap& f) {
              std::vector<std::pair<std::string, std::string>> rows;
              for (const auto& v : validate_disk_map(f).violations) {
                  rows.push_back({v.rule, v.detail});
              }
              return rows;
          },
          py::arg("disk_map"));

    py::class_<BadSimplex>(m, "BadSimplex")
        .def_readonly("simplex", &BadSimplex::simplex)
        .def_readonly("image", &BadSimplex::image)
        .def_readonly("deg", &BadSimplex::deg)
        .def("__repr__", [](const BadSimplex& b) {
            return "BadSimplex(deg=" + std::to_string(b.deg) + ")";
        });

    m.def("bad_simplices", &bad_simplices, py::arg("disk_map"),
          py::arg("budget"),
          "Interior faces with pillar image degree above the budget, worst "
          "first");
    m.def("descent_measure", &descent_measure, py::arg("disk_map"),
          "The strictly decreasing (degree, dimension, count) triple");

    py::enum_<FillStrategy>(m, "FillStrategy")
        .value("Path", FillStrategy::Path)
        .value("Star", FillStrategy::Star)
        .value("Bounded", FillStrategy::Bounded);

    py::class_<FillOptions>(m, "FillOptions")
        .def(py::init([](FillStrategy strategy, int max_area) {
                 FillOptions options;
                 options.strategy = strategy;
                 options.max_area = max_area;
                 return options;
             }),
             py::arg("strategy") = FillStrategy::Bounded,
             py::arg("max_area") = 64)
        .def_readwrite("strategy", &FillOptions::strategy)
        .def_readwrite("max_area", &FillOptions::max_area);

    py::class_<TraceEntry>(m, "TraceEntry")
        .def_readonly("step", &TraceEntry::step)
        .def_readonly("measure", &TraceEntry::measure)
        .def_readonly("omega", &TraceEntry::omega)
        .def_readonly("image", &TraceEntry::image);

    py::class_<DescentResult>(m, "DescentResult")
        .def_readonly("final_map", &DescentResult::final_map)
        .def_readonly("trace", &DescentResult::trace)
        .def_readonly("final_measure", &DescentResult::final_measure);

    m.def("surgery_step", &surgery_step, py::arg("disk_map"), py::arg("omega"),
          py::arg("budget"), py::arg("options") = FillOptions{},
          "One measure-lowering move at a worst bad simplex");
    m.def("surgery_descent", &surgery_descent, py::arg("disk_map"),
          py::arg("budget"), py::arg("options") = FillOptions{},
          "Iterate surgery steps until the disk maps into the sublevel "
          "complex at the budget");

    py::class_<PlantedInstance>(m, "PlantedInstance")
        .def_readonly("disk_map", &PlantedInstance::disk_map)
        .def_readonly("budget", &PlantedInstance::budget)
        .def_readonly("family", &PlantedInstance::family);

    m.def("generate_planted_instance", &generate_planted_instance,
          py::arg("seed"),
          "Deterministic bad-but-fillable disk map; family cycles with the "
          "seed");
    m.def("run_planted_descents", &run_planted_descents,
          py::arg("instance_count"), py::arg("options") = FillOptions{},
          py::arg("base_seed") = 0,
          "Descend many planted instances and recheck every postcondition");

    m.def("graph_to_json",
          [](const GenusGraph& g) { return graph_to_json(g).dump(2); },
          py::arg("graph"));
    m.def("graph_from_json",
          [](const std::string& text) {
              return graph_from_json(Json::parse(text));
          },
          py::arg("text"));
    m.def("complex_to_json",
          [](const SimplicialComplex& k) { return complex_to_json(k).dump(2); },
          py::arg("complex"));
    m.def("complex_from_json",
          [](const std::string& text) {
              return complex_from_json(Json::parse(text));
          },
          py::arg("text"));
    m.def("filtration_to_json",
          [](const DegreeFilteredComplex& f) {
              return filtration_to_json(f).dump(2);
          },
          py::arg("filtration"));
    m.def("filtration_from_json",
          [](const std::string& text) {
              return filtration_from_json(Json::parse(text));
          },
          py::arg("text"));
    m.def("disk_map_to_json",
          [](const DiskMap& f) { return disk_map_to_json(f).dump(2); },
          py::arg("disk_map"));
    m.def("disk_map_from_json",
          [](const std::string& text) {
              return disk_map_from_json(Json::parse(text));
          },
          py::arg("text"));
    m.def("graph_to_dot", &graph_to_dot, py::arg("graph"));
    m.def("census_to_csv", &census_to_csv, py::arg("n"), py::arg("max_degree"),
          py::arg("graphs"));

    m.def("run_command",
          [](const std::string& subcommand, const py::kwargs& kwargs) {
              CommandConfig config;
              config.subcommand = subcommand;
              for (const auto& item : kwargs) {
                  std::string key = py::cast<std::string>(item.first);
                  if (key == "input_path") {
                      config.input_path = py::cast<std::string>(item.second);
                  } else if (key == "output_path") {
                      config.output_path = py::cast<std::string>(item.second);
                  } else if (key == "n") {
                      config.n = py::cast<int>(item.second);
                  } else if (key == "max_degree") {
                      config.max_degree = py::cast<int>(item.second);
                  } else if (key == "include_empty") {
                      config.include_empty = py::cast<bool>(item.second);
                  } else if (key == "suite") {
                      config.suite = py::cast<std::string>(item.second);
                  } else if (key == "n_max") {
                      config.n_max = py::cast<int>(item.second);
                  } else if (key == "d_max") {
                      config.d_max = py::cast<int>(item.second);
                  } else if (key == "budget") {
                      config.budget = py::cast<int>(item.second);
                  } else if (key == "planted") {
                      config.planted = py::cast<int>(item.second);
                  } else if (key == "seed") {
                      config.seed = py::cast<std::uint64_t>(item.second);
                  } else if (key == "strategy") {
                      config.strategy = py::cast<std::string>(item.second);
                  } else if (key == "max_area") {
                      config.max_area = py::cast<int>(item.second);
                  } else if (key == "format") {
                      config.format = py::cast<std::string>(item.second);
                  } else if (key == "override_caps") {
                      config.override_caps = py::cast<bool>(item.second);
                  } else {
                      throw SchemaError("unknown run_command option: " + key);
                  }
              }
              RunReport report = run(config);
              py::dict out;
              out["exit_code"] = report.exit_code;
              out["summary"] = report.summary.dump(2);
              out["artifacts"] = report.artifacts;
              return out;
          },
          py::arg("subcommand"),
          "Invoke one CLI subcommand in process; summary is a JSON string.\n"
          "Options: input_path, output_path, n, max_degree, include_empty,\n"
          "suite, n_max, d_max, budget, planted, seed, strategy, max_area,\n"
          "format, override_caps");
}
