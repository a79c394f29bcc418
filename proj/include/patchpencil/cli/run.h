#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "patchpencil/error.h"

namespace patchpencil::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // I/O and anything unexpected
inline constexpr int kExitRefuted = 2;       // a stated object was shown not to work
inline constexpr int kExitUnverified = 3;    // search exhausted or budget ran out
inline constexpr int kExitUsage = 64;        // bad flags, preconditions, malformed input

inline constexpr long kDefaultBudget = 4096;
inline constexpr const char* kBudgetEnv = "PATCHPENCIL_BUDGET";

struct RunConfig {
  long budget = kDefaultBudget;  // refinement budget for interval computations
  bool approx = false;           // add decimal annotations next to exact values
  bool verbose = false;
};

/// Exit code for a library error. explicit_epsilon distinguishes a refuted
/// user-supplied perturbation from an exhausted search.
int exit_code_for(const Error& e, bool explicit_epsilon);

/// Budget from the environment, or fallback when unset. Throws Precondition
/// on a value that is not a positive integer.
long budget_from_env(long fallback);

/// Copies j, adding "<key>_approx" decimals next to every fraction string or
/// list of fraction strings and an "approx" midpoint inside isolating-interval
/// objects. Exact values are left untouched.
nlohmann::json with_approx(const nlohmann::json& j);

/// Writes to a sibling temporary file, then renames over path.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patchpencil::cli
