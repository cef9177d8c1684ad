#include "spheredeg/cli.hpp"

#include <chrono>

#include "spheredeg/enumeration.hpp"
#include "spheredeg/errors.hpp"
#include "spheredeg/filtration.hpp"
#include "spheredeg/homology.hpp"
#include "spheredeg/surgery.hpp"

namespace spheredeg {

namespace {

void emit_json(RunReport& report, const std::string& path, const Json& j) {
    write_json_file(path, j);
    report.artifacts.push_back(path);
}

void emit_text(RunReport& report, const std::string& path,
               const std::string& text) {
    write_text_file(path, text);
    report.artifacts.push_back(path);
}

FillOptions fill_options(const CommandConfig& config) {
    FillOptions options;
    if (config.strategy == "path") {
        options.strategy = FillStrategy::Path;
    } else if (config.strategy == "star") {
        options.strategy = FillStrategy::Star;
    } else if (config.strategy == "bounded") {
        options.strategy = FillStrategy::Bounded;
    } else {
        throw SchemaError("unknown fill strategy: " + config.strategy);
    }
    if (config.max_area < 1) {
        throw SchemaError("max-area must be at least 1");
    }
    options.max_area = config.max_area;
    return options;
}

void run_enumerate(const CommandConfig& config, RunReport& report) {
    if (config.output_path.empty()) {
        throw SchemaError("enumerate requires --out");
    }
    if (config.format != "json" && config.format != "csv") {
        throw SchemaError("enumerate writes json or csv, not " +
                          config.format);
    }
    EnumerationRequest request;
    request.n = config.n;
    request.max_degree = config.max_degree;
    request.include_empty = config.include_empty;
    EnumerationLimits limits;
    limits.override_caps = config.override_caps;
    std::vector<GenusGraph> graphs = enumerate_types(request, limits);
    if (config.format == "json") {
        emit_json(report, config.output_path,
                  census_to_json(config.n, config.max_degree, graphs));
    } else {
        emit_text(report, config.output_path,
                  census_to_csv(config.n, config.max_degree, graphs));
    }
    report.summary["n"] = config.n;
    report.summary["d"] = config.max_degree;
    report.summary["count"] = static_cast<long long>(graphs.size());
}

void run_verify(const CommandConfig& config, RunReport& report) {
    EnumerationLimits limits;
    limits.override_caps = config.override_caps;
    VerificationReport result =
        verify_suite(config.suite, config.n_max, config.d_max, limits);
    if (!config.output_path.empty()) {
        emit_json(report, config.output_path, report_to_json(result));
    }
    report.summary["report"] = report_to_json(result);
    report.exit_code = result.pass() ? 0 : 1;
}

void run_homology(const CommandConfig& config, RunReport& report) {
    if (config.input_path.empty()) {
        throw SchemaError("homology requires --in");
    }
    SimplicialComplex k = complex_from_json(read_json_file(config.input_path));
    std::size_t face_cap = config.override_caps ? 5000000 : 200000;
    HomologyProfile profile = reduced_homology(k, face_cap);
    Json out = homology_to_json(profile);
    if (config.output_path.empty()) {
        report.summary["result"] = out;
    } else {
        emit_json(report, config.output_path, out);
    }
}

void run_surgery(const CommandConfig& config, RunReport& report) {
    FillOptions options = fill_options(config);
    if (config.planted > 0) {
        VerificationReport result =
            run_planted_descents(config.planted, options, config.seed);
        if (!config.output_path.empty()) {
            emit_json(report, config.output_path, report_to_json(result));
        }
        report.summary["report"] = report_to_json(result);
        report.exit_code = result.pass() ? 0 : 1;
        return;
    }
    if (config.input_path.empty()) {
        throw SchemaError("surgery requires --in or --planted");
    }
    DiskMap f = disk_map_from_json(read_json_file(config.input_path));
    DescentResult result = surgery_descent(f, config.budget, options);
    Json out = {{"final", disk_map_to_json(result.final_map)},
                {"final_measure",
                 {result.final_measure[0], result.final_measure[1],
                  result.final_measure[2]}},
                {"trace", trace_to_json(result.trace)}};
    if (config.output_path.empty()) {
        report.summary["result"] = out;
    } else {
        emit_json(report, config.output_path, out);
    }
    report.summary["steps"] = static_cast<long long>(result.trace.size());
    report.summary["final_measure"] = out.at("final_measure");
}

void check_census(const Json& j) {
    if (!j.is_object() || j.size() != 2 || !j.contains("summary") ||
        !j.contains("graphs") || !j.at("graphs").is_array()) {
        throw SchemaError(
            "a census must hold exactly \"summary\" and a \"graphs\" array");
    }
    const Json& s = j.at("summary");
    if (!s.is_object() || s.size() != 3 || !s.contains("n") ||
        !s.contains("d") || !s.contains("count") ||
        !s.at("n").is_number_integer() || !s.at("d").is_number_integer() ||
        !s.at("count").is_number_integer()) {
        throw SchemaError(
            "a census summary must hold integers \"n\", \"d\", \"count\"");
    }
    if (s.at("count").get<long long>() !=
        static_cast<long long>(j.at("graphs").size())) {
        throw SchemaError("census count does not match the graph list");
    }
}

void run_export(const CommandConfig& config, RunReport& report) {
    if (config.input_path.empty() || config.output_path.empty()) {
        throw SchemaError("export requires --in and --out");
    }
    Json in = read_json_file(config.input_path);
    if (!in.is_object() && !in.is_array()) {
        throw SchemaError(config.input_path +
                          " is not a recognized artifact shape");
    }

    // Recognize the artifact by its key set, then parse strictly so a
    // malformed file fails before anything is written.
    std::string kind;
    Json out;
    std::string text;
    if (in.is_object() && in.contains("disk")) {
        kind = "disk-map";
        out = disk_map_to_json(disk_map_from_json(in));
    } else if (in.is_object() && in.contains("graphs")) {
        kind = "census";
        check_census(in);
        std::vector<GenusGraph> graphs;
        for (const auto& entry : in.at("graphs")) {
            graphs.push_back(graph_from_json(entry));
        }
        int n = in.at("summary").at("n").get<int>();
        int d = in.at("summary").at("d").get<int>();
        if (config.format == "csv") {
            text = census_to_csv(n, d, graphs);
        } else {
            out = census_to_json(n, d, graphs);
        }
    } else if (in.is_object() && in.contains("deg")) {
        kind = "filtration";
        out = filtration_to_json(filtration_from_json(in));
    } else if (in.is_object() && in.contains("vertices")) {
        kind = "graph";
        GenusGraph g = graph_from_json(in);
        if (config.format == "dot") {
            text = graph_to_dot(g);
        } else {
            out = graph_to_json(g);
        }
    } else if (in.is_object() && in.contains("dims")) {
        kind = "homology";
        out = homology_to_json(homology_from_json(in));
    } else if (in.is_object() && in.contains("facets")) {
        kind = "complex";
        out = complex_to_json(complex_from_json(in));
    } else if (in.is_array()) {
        kind = "trace";
        out = trace_to_json(trace_from_json(in));
    } else {
        throw SchemaError(config.input_path +
                          " is not a recognized artifact shape");
    }

    if (config.format == "json") {
        emit_json(report, config.output_path, out);
    } else if (config.format == "dot") {
        if (kind != "graph") {
            throw SchemaError("dot export needs a graph file, got " + kind);
        }
        emit_text(report, config.output_path, text);
    } else if (config.format == "csv") {
        if (kind != "census") {
            throw SchemaError("csv export needs a census file, got " + kind);
        }
        emit_text(report, config.output_path, text);
    } else {
        throw SchemaError("unknown export format: " + config.format);
    }
    report.summary["kind"] = kind;
}

}  // namespace

RunReport run(const CommandConfig& config) {
    RunReport report;
    report.summary = Json::object();
    auto started = std::chrono::steady_clock::now();
    try {
        if (config.subcommand == "enumerate") {
            run_enumerate(config, report);
        } else if (config.subcommand == "verify") {
            run_verify(config, report);
        } else if (config.subcommand == "homology") {
            run_homology(config, report);
        } else if (config.subcommand == "surgery") {
            run_surgery(config, report);
        } else if (config.subcommand == "export") {
            run_export(config, report);
        } else {
            throw SchemaError("unknown subcommand: " + config.subcommand);
        }
    } catch (const ResourceLimitError& e) {
        report.exit_code = 3;
        report.summary["error"] = {{"kind", "resource-limit"},
                                   {"what", e.what()}};
    } catch (const FillError& e) {
        report.exit_code = 1;
        report.summary["error"] = {{"kind", "fill-failure"}, {"what", e.what()}};
    } catch (const IoError& e) {
        report.exit_code = 2;
        report.summary["error"] = {{"kind", "io-error"}, {"what", e.what()}};
    } catch (const InvalidGraphError& e) {
        report.exit_code = 2;
        report.summary["error"] = {{"kind", "invalid-graph"},
                                   {"what", e.what()}};
    } catch (const SchemaError& e) {
        report.exit_code = 2;
        report.summary["error"] = {{"kind", "schema-error"}, {"what", e.what()}};
    } catch (const Error& e) {
        report.exit_code = 1;
        report.summary["error"] = {{"kind", "internal-error"},
                                   {"what", e.what()}};
    }
    report.summary["subcommand"] = config.subcommand;
    report.summary["artifacts"] = report.artifacts;
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    return report;
}

}  // namespace spheredeg
