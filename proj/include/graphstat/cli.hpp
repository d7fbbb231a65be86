#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphstat::cli {

// Run one command: parses the argument list (without the program name),
// executes the subcommand, and prints a report to `out`.  The report wraps
// the structured result with the echoed command line and a digest of the
// input files; for fixed inputs and seeds it is byte-identical across runs.
// Timing goes to `err` so it never perturbs the report.
//
// Exit codes: 0 success, 1 malformed input (bad flags, unreadable or invalid
// files, infeasible requests), 2 internal invariant failure, 3 mismatch
// between the pipelines compared by `verify`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphstat::cli
