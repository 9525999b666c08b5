#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ulrich::cli {

/// Runs the command line given as argument vector (without the program name).
/// Writes results to out and diagnostics to err. Exit codes: 0 success,
/// 2 input validation error, 3 resource-guard abort, 1 failed self-check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders the table view of a JSON envelope exactly as the table format
/// prints it; re-rendering a parsed --format json document reproduces the
/// table byte for byte.
std::string render_table(const nlohmann::json& envelope);

} // namespace ulrich::cli
