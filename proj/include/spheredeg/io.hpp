#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spheredeg/filtration.hpp"
#include "spheredeg/genus_graph.hpp"
#include "spheredeg/homology.hpp"
#include "spheredeg/report.hpp"
#include "spheredeg/simplicial.hpp"
#include "spheredeg/surgery.hpp"

namespace spheredeg {

using Json = nlohmann::json;

/// JSON shapes. Keys are emitted in alphabetical order and parsed
/// strictly: a missing required key or an unknown key is a SchemaError.
///
///   graph       {"vertices":[{"id":0,"genus":0,"basepoint":true}],
///                "edges":[{"id":0,"ends":[0,1]}]}
///               (genus defaults to 0 and basepoint to false on input)
///   complex     {"facets":[["a","b"]]}
///   homology    {"dims":[{"i":0,"rank":0,"torsion":[]}]}
///   filtration  {"facets":[...],"deg":[[["a","b"],1],...]}
///   disk map    {"disk":{...},"dim":1,"target":{...},"map":{"p0":"a"}}
///   trace       [{"step":0,"measure":[x,y,c],"omega":[...],"image":[...]}]

Json graph_to_json(const GenusGraph& g);
GenusGraph graph_from_json(const Json& j);

Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

Json homology_to_json(const HomologyProfile& profile);
HomologyProfile homology_from_json(const Json& j);

Json filtration_to_json(const DegreeFilteredComplex& f);
DegreeFilteredComplex filtration_from_json(const Json& j);

Json disk_map_to_json(const DiskMap& f);
DiskMap disk_map_from_json(const Json& j);

Json trace_to_json(const std::vector<TraceEntry>& trace);
std::vector<TraceEntry> trace_from_json(const Json& j);

/// Violations as {"ok":bool,"violations":[{"rule":r,"detail":d}]}.
Json validation_to_json(const ValidationReport& report);

/// Suite outcome as {"suite","instances_checked","checks_performed",
/// "counterexamples","pass"}. Wall-clock duration is deliberately left
/// out so artifacts are byte-identical across runs.
Json report_to_json(const VerificationReport& report);

/// {"summary":{"n":..,"d":..,"count":..},"graphs":[...]} in enumeration
/// order.
Json census_to_json(int n, int max_degree,
                    const std::vector<GenusGraph>& graphs);

/// CSV with header n,d,dim,degree,count: one row per (dim, degree) class
/// in that order.
std::string census_to_csv(int n, int max_degree,
                          const std::vector<GenusGraph>& graphs);

/// Graphviz rendering: vertices as circles labeled g=<genus>, the
/// basepoint double-circled, one line per edge.
std::string graph_to_dot(const GenusGraph& g);

/// Whole-file helpers. Writes go through a temporary file in the same
/// directory followed by a rename. Failures throw IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace spheredeg
