#include "spheredeg/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

void check_keys(const Json& j, const std::string& what,
                const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
    if (!j.is_object()) {
        throw SchemaError(what + " must be a JSON object");
    }
    for (const auto& key : required) {
        if (!j.contains(key)) {
            throw SchemaError(what + " is missing the key \"" + key + "\"");
        }
    }
    for (const auto& [key, value] : j.items()) {
        if (required.count(key) == 0 && optional.count(key) == 0) {
            throw SchemaError(what + " has the unexpected key \"" + key + "\"");
        }
    }
}

int read_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw SchemaError(what + " must be an integer");
    }
    return j.get<int>();
}

long long read_long(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw SchemaError(what + " must be an integer");
    }
    return j.get<long long>();
}

bool read_bool(const Json& j, const std::string& what) {
    if (!j.is_boolean()) {
        throw SchemaError(what + " must be a boolean");
    }
    return j.get<bool>();
}

std::string read_string(const Json& j, const std::string& what) {
    if (!j.is_string()) {
        throw SchemaError(what + " must be a string");
    }
    return j.get<std::string>();
}

const Json& read_array(const Json& j, const std::string& what) {
    if (!j.is_array()) {
        throw SchemaError(what + " must be an array");
    }
    return j;
}

Face face_from_json(const Json& j, const std::string& what) {
    Face face;
    for (const auto& entry : read_array(j, what)) {
        face.push_back(read_string(entry, what + " label"));
    }
    return face;
}

}  // namespace

Json graph_to_json(const GenusGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) {
        vertices.push_back(
            {{"id", v.id}, {"genus", v.genus}, {"basepoint", v.basepoint}});
    }
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"id", e.id}, {"ends", {e.end_a, e.end_b}}});
    }
    return {{"vertices", vertices}, {"edges", edges}};
}

GenusGraph graph_from_json(const Json& j) {
    check_keys(j, "graph", {"vertices", "edges"});
    std::vector<GraphVertex> vertices;
    for (const auto& entry : read_array(j.at("vertices"), "graph vertices")) {
        check_keys(entry, "graph vertex", {"id"}, {"genus", "basepoint"});
        GraphVertex v;
        v.id = read_int(entry.at("id"), "vertex id");
        v.genus =
            entry.contains("genus") ? read_int(entry.at("genus"), "genus") : 0;
        v.basepoint = entry.contains("basepoint") &&
                      read_bool(entry.at("basepoint"), "basepoint");
        vertices.push_back(v);
    }
    std::vector<GraphEdge> edges;
    for (const auto& entry : read_array(j.at("edges"), "graph edges")) {
        check_keys(entry, "graph edge", {"id", "ends"});
        const Json& ends = read_array(entry.at("ends"), "edge ends");
        if (ends.size() != 2) {
            throw SchemaError("edge ends must list exactly two vertex ids");
        }
        GraphEdge e;
        e.id = read_int(entry.at("id"), "edge id");
        e.end_a = read_int(ends[0], "edge end");
        e.end_b = read_int(ends[1], "edge end");
        edges.push_back(e);
    }
    return GenusGraph(vertices, edges);
}

Json complex_to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (const auto& facet : k.facets()) facets.push_back(facet);
    return {{"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
    check_keys(j, "complex", {"facets"});
    std::vector<Face> facets;
    for (const auto& entry : read_array(j.at("facets"), "complex facets")) {
        facets.push_back(face_from_json(entry, "facet"));
    }
    return SimplicialComplex::from_facets(facets);
}

Json homology_to_json(const HomologyProfile& profile) {
    Json dims = Json::array();
    for (std::size_t i = 0; i < profile.dims.size(); ++i) {
        dims.push_back({{"i", static_cast<int>(i)},
                        {"rank", profile.dims[i].rank},
                        {"torsion", profile.dims[i].torsion}});
    }
    return {{"dims", dims}};
}

HomologyProfile homology_from_json(const Json& j) {
    check_keys(j, "homology", {"dims"});
    HomologyProfile profile;
    int expected = 0;
    for (const auto& entry : read_array(j.at("dims"), "homology dims")) {
        check_keys(entry, "homology dim", {"i", "rank", "torsion"});
        if (read_int(entry.at("i"), "homology index") != expected) {
            throw SchemaError("homology dims must list i = 0, 1, ... in order");
        }
        HomologyDim dim;
        dim.rank = read_int(entry.at("rank"), "homology rank");
        for (const auto& t : read_array(entry.at("torsion"), "torsion")) {
            dim.torsion.push_back(read_long(t, "torsion order"));
        }
        profile.dims.push_back(dim);
        ++expected;
    }
    return profile;
}

Json filtration_to_json(const DegreeFilteredComplex& f) {
    Json out = complex_to_json(f.complex());
    Json deg = Json::array();
    for (const auto& [face, value] : f.degrees()) {
        deg.push_back({face, value});
    }
    out["deg"] = deg;
    return out;
}

DegreeFilteredComplex filtration_from_json(const Json& j) {
    check_keys(j, "filtration", {"facets", "deg"});
    SimplicialComplex complex =
        complex_from_json(Json{{"facets", j.at("facets")}});
    std::map<Face, int> degrees;
    for (const auto& entry : read_array(j.at("deg"), "filtration deg")) {
        const Json& pair = read_array(entry, "deg entry");
        if (pair.size() != 2) {
            throw SchemaError("each deg entry must be a [face, value] pair");
        }
        Face face = face_from_json(pair[0], "deg face");
        degrees[normalize_face(face)] = read_int(pair[1], "deg value");
    }
    return DegreeFilteredComplex::from_faces(complex, degrees);
}

Json disk_map_to_json(const DiskMap& f) {
    Json map = Json::object();
    for (const auto& [from, to] : f.vertex_map) map[from] = to;
    return {{"disk", complex_to_json(f.disk)},
            {"dim", f.dim},
            {"target", filtration_to_json(f.target)},
            {"map", map}};
}

DiskMap disk_map_from_json(const Json& j) {
    check_keys(j, "disk map", {"disk", "dim", "target", "map"});
    DiskMap f;
    f.disk = complex_from_json(j.at("disk"));
    f.dim = read_int(j.at("dim"), "disk dimension");
    f.target = filtration_from_json(j.at("target"));
    if (!j.at("map").is_object()) {
        throw SchemaError("disk map \"map\" must be an object");
    }
    for (const auto& [from, to] : j.at("map").items()) {
        f.vertex_map[from] = read_string(to, "map image");
    }
    return f;
}

Json trace_to_json(const std::vector<TraceEntry>& trace) {
    Json out = Json::array();
    for (const auto& entry : trace) {
        out.push_back({{"step", entry.step},
                       {"measure",
                        {entry.measure[0], entry.measure[1], entry.measure[2]}},
                       {"omega", entry.omega},
                       {"image", entry.image}});
    }
    return out;
}

std::vector<TraceEntry> trace_from_json(const Json& j) {
    std::vector<TraceEntry> trace;
    for (const auto& entry : read_array(j, "trace")) {
        check_keys(entry, "trace entry", {"step", "measure", "omega", "image"});
        TraceEntry t;
        t.step = read_int(entry.at("step"), "trace step");
        const Json& measure = read_array(entry.at("measure"), "trace measure");
        if (measure.size() != 3) {
            throw SchemaError("trace measure must have three components");
        }
        for (int i = 0; i < 3; ++i) {
            t.measure[i] = read_long(measure[i], "measure component");
        }
        t.omega = face_from_json(entry.at("omega"), "trace omega");
        t.image = face_from_json(entry.at("image"), "trace image");
        trace.push_back(t);
    }
    return trace;
}

Json validation_to_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
    }
    return {{"ok", report.ok()}, {"violations", violations}};
}

Json report_to_json(const VerificationReport& report) {
    return {{"suite", report.suite},
            {"instances_checked", report.instances_checked},
            {"checks_performed", report.checks_performed},
            {"counterexamples", report.counterexamples},
            {"pass", report.pass()}};
}

Json census_to_json(int n, int max_degree,
                    const std::vector<GenusGraph>& graphs) {
    Json list = Json::array();
    for (const auto& g : graphs) list.push_back(graph_to_json(g));
    return {{"summary",
             {{"n", n},
              {"d", max_degree},
              {"count", static_cast<long long>(graphs.size())}}},
            {"graphs", list}};
}

std::string census_to_csv(int n, int max_degree,
                          const std::vector<GenusGraph>& graphs) {
    std::map<std::pair<int, int>, long long> rows;
    for (const auto& g : graphs) {
        ++rows[{graph_stats(g).dim, degree(g)}];
    }
    std::ostringstream out;
    out << "n,d,dim,degree,count\n";
    for (const auto& [key, count] : rows) {
        out << n << "," << max_degree << "," << key.first << "," << key.second
            << "," << count << "\n";
    }
    return out.str();
}

std::string graph_to_dot(const GenusGraph& g) {
    std::ostringstream out;
    out << "graph genus_graph {\n";
    for (const auto& v : g.vertices()) {
        out << "  v" << v.id << " [label=\"g=" << v.genus << "\", shape="
            << (v.basepoint ? "doublecircle" : "circle") << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  v" << e.end_a << " -- v" << e.end_b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path + " for reading");
    }
    std::ostringstream content;
    content << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed while reading " + path);
    }
    return content.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + temp + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw IoError("failed while writing " + temp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw IoError("cannot move " + temp + " into place: " + ec.message());
    }
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace spheredeg
