#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "spheredeg/cli.hpp"

int main(int argc, char** argv) {
    spheredeg::CommandConfig config;

    CLI::App app{
        "Degree toolkit for genus-labeled sphere system graphs: type "
        "enumeration, collapse and pillar verification, exact simplicial "
        "homology, and degree-lowering surgery on filtered complexes."};
    app.require_subcommand(1);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Write a census of graph types");
    enumerate->add_option("--n", config.n, "Invariant n = genus + rank")
        ->required();
    enumerate->add_option("--max-degree", config.max_degree, "Degree bound")
        ->required();
    enumerate->add_flag("--include-empty", config.include_empty,
                        "Also list the edgeless type");
    enumerate->add_option("--format", config.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--out", config.output_path, "Census file")
        ->required();
    enumerate->add_flag("--override-caps", config.override_caps,
                        "Lift enumeration size caps");

    CLI::App* verify =
        app.add_subcommand("verify", "Run one exhaustive verification suite");
    verify->add_option("--suite", config.suite, "Suite name")->required();
    verify->add_option("--n-max", config.n_max, "Largest n")->required();
    verify->add_option("--d-max", config.d_max, "Largest degree")->required();
    verify->add_option("--out", config.output_path, "Report file");
    verify->add_flag("--override-caps", config.override_caps,
                     "Lift enumeration size caps");

    CLI::App* homology = app.add_subcommand(
        "homology", "Reduced integral homology of a complex file");
    homology->add_option("--in", config.input_path, "Complex file")
        ->required();
    homology->add_option("--out", config.output_path, "Profile file");
    homology->add_flag("--override-caps", config.override_caps,
                       "Lift the face-count cap");

    CLI::App* surgery = app.add_subcommand(
        "surgery", "Run the degree-lowering descent on a disk map");
    surgery->add_option("--in", config.input_path, "Disk map file");
    surgery->add_option("--budget", config.budget, "Degree budget");
    surgery->add_option("--planted", config.planted,
                        "Generate and descend this many planted instances");
    surgery->add_option("--seed", config.seed,
                        "First seed for planted instances");
    surgery->add_option("--strategy", config.strategy,
                        "Circle filler: path, star, or bounded")
        ->check(CLI::IsMember({"path", "star", "bounded"}));
    surgery->add_option("--max-area", config.max_area,
                        "Facet cap for the bounded filler");
    surgery->add_option("--out", config.output_path, "Result file");

    CLI::App* exporter = app.add_subcommand(
        "export", "Re-emit an artifact file as json, dot, or csv");
    exporter->add_option("--in", config.input_path, "Artifact file")
        ->required();
    exporter->add_option("--format", config.format, "json, dot, or csv")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    exporter->add_option("--out", config.output_path, "Output file")
        ->required();

    if (const char* env = std::getenv("SPHEREDEG_OVERRIDE_CAPS");
        env != nullptr && std::string(env) == "1") {
        config.override_caps = true;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e, std::cout, std::cerr);
        return 2;  // usage error
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    spheredeg::RunReport report = spheredeg::run(config);
    std::cout << report.summary.dump(2) << "\n";
    // Timing goes to stderr so comparable output stays byte-identical.
    std::cerr << "elapsed_seconds=" << report.duration_seconds << "\n";
    return report.exit_code;
}
