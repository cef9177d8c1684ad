#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spheredeg/io.hpp"

namespace spheredeg {

/// One parsed command line. Exactly one subcommand; fields outside the
/// chosen subcommand's list are ignored.
///
/// Subcommands:
///   enumerate  --n --max-degree [--include-empty] [--format json|csv] --out
///   verify     --suite --n-max --d-max [--out]
///   homology   --in [--out]
///   surgery    --in --budget [--strategy] [--max-area] [--out]
///   surgery    --planted COUNT [--seed] [--strategy] [--max-area] [--out]
///   export     --in --format json|dot|csv --out
struct CommandConfig {
    std::string subcommand;
    std::string input_path;
    std::string output_path;
    int n = 1;
    int max_degree = 0;
    bool include_empty = false;
    std::string suite;
    int n_max = 1;
    int d_max = 0;
    int budget = 0;
    int planted = 0;  // > 0 switches surgery to planted mode
    std::uint64_t seed = 0;
    std::string strategy = "bounded";  // path | star | bounded
    int max_area = 64;
    std::string format = "json";
    bool override_caps = false;
};

/// Outcome of one run. summary is deterministic and safe to print to
/// stdout; wall-clock time is reported separately so timing never lands
/// in comparable output.
struct RunReport {
    int exit_code = 0;
    Json summary;
    std::vector<std::string> artifacts;
    double duration_seconds = 0.0;
};

/// Exit codes: 0 success, 1 suite or fill failure (counterexample payload
/// in summary), 2 usage or schema error, 3 resource limit. Never throws;
/// every library error is mapped to an exit code and an "error" object in
/// the summary. Output files are written atomically.
RunReport run(const CommandConfig& config);

}  // namespace spheredeg
