#pragma once

#include <cstdint>
#include <string>

namespace drg::app {

// Shared configuration for every front-end command.  Negative limits mean
// "use the command's default".  Table and verify runs translate the default
// into node-count budgets only, so their output is identical on any machine
// and for any worker count.
struct RunConfig {
    std::uint64_t seed = 0;
    int threads = 0;            // 0 = hardware concurrency
    double time_limit_s = -1.0;
    long long node_limit = -1;
    bool json = false;
};

struct CommandOutput {
    std::string text;   // fully rendered (JSON when cfg.json)
    int exit_code = 0;  // 0 ok, 1 verification failure, 2 usage, 3 budget
};

// which: "section2_examples" (max-cut bound comparison) or "section2_alpha"
// (independence-number table).  Recomputes every cell and marks agreement
// with the published values.
CommandOutput run_table(const std::string& which, const RunConfig& cfg);

// suite: "catalog", "lemmas", "extendability" or "all".
CommandOutput run_verify(const std::string& suite, const RunConfig& cfg);

// target: catalog spec ("coxeter", "hamming(3,3)", "hamming 3 3") or a path
// to a DIMACS file.
CommandOutput run_params(const std::string& target, const RunConfig& cfg);
CommandOutput run_analyze(const std::string& target, const RunConfig& cfg);
CommandOutput run_maxcut(const std::string& target, const RunConfig& cfg);
CommandOutput run_alpha(const std::string& target, const RunConfig& cfg);
// t < 0: search the full extendability; t >= 1: test that single level.
CommandOutput run_extend(const std::string& target, int t, const RunConfig& cfg);
CommandOutput run_catalog_list(const RunConfig& cfg);
// Writes DIMACS text for the named entry; out_path empty = return as text.
CommandOutput run_catalog_export(const std::string& name, const std::string& out_path,
                                 const RunConfig& cfg);

}  // namespace drg::app
