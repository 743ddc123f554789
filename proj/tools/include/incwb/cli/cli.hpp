#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "incwb/cli/report.hpp"

namespace incwb::cli {

/// Parses `args` (without the program name), runs one subcommand and
/// returns its exit code. Summaries go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hall(n) end to end: lambda-freeness with lambda = n + 1, failure of the
/// whole family, reduction to a relation system and a CEGAR certificate
/// that G_M needs more than n colours. Throws InputError for n = 0.
Report demo_incompactness(std::size_t n, const RunConfig& cfg);

/// Seeded property battery; `which` is "all" or a module name.
Report run_suite(std::string_view which, const RunConfig& cfg);
std::vector<std::string> suite_names();

/// Runs a pipeline description {"seed", "budget", "stages":[{"op":..., ...}]}.
/// Stage names and parameter types are checked before anything runs.
Report run_pipeline(const json& spec, const RunConfig& cfg);

}  // namespace incwb::cli
