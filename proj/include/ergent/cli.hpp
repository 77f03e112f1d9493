#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ergent {

/// One CLI invocation: subcommand, its parameters as parsed key/value
/// strings, and where/how to write artifacts. Parsing is strict: unknown
/// keys are rejected (exit 2).
struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    std::string output_path;  // empty: print the summary only
    std::string format;       // csv | json | svg (subcommand-dependent default)
};

/// Executes a config: writes artifacts, prints a one-line summary to
/// `out`, and returns the process exit status (0 ok, 2 schema violation,
/// 3 resource cap, 4 numerical invariant violation). Failures emit a
/// machine-readable error JSON on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end (CLI11): parses into a RunConfig and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ergent
