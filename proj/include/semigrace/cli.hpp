#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace semigrace::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // verification failed or a counterexample was found
  kExitUsage = 2,   // usage or validation error
  kExitBudget = 3,  // search budget exhausted, outcome unknown
};

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string human_report;
  // Structured document printed instead of the report under --machine.
  std::optional<nlohmann::json> document;
};

// Environment variable that overrides the default search budget.
inline constexpr const char* kBudgetEnv = "SEMIGRACE_BUDGET";

struct TreesOptions {
  int order = 0;
  int max_order = 20;
  std::optional<std::string> output_path;
};

struct LabelOptions {
  int order = 0;
  std::string mode = "graceful";
  std::uint64_t budget = 0;
  int max_order = 20;
  std::optional<std::string> tree_file;
};

struct DecomposeOptions {
  int order = 0;
  bool family = false;
  std::optional<int> tree_index;
  std::optional<std::string> tree_file;
  std::optional<std::string> output_path;
  std::uint64_t budget = 0;
  int max_order = 20;
};

struct FeasibilityOptions {
  std::optional<int> order;
  std::optional<std::int64_t> tau;
  bool table = false;
  int max_order = 20;
};

struct EggletonOptions {
  std::string output_dir = ".";
  std::uint64_t budget = 0;
};

// The command functions throw the library's exceptions on bad input;
// run() maps them to exit codes.
CommandOutcome cmd_trees(const TreesOptions& options);
CommandOutcome cmd_label(const LabelOptions& options);
CommandOutcome cmd_decompose(const DecomposeOptions& options);
CommandOutcome cmd_verify(const std::string& certificate_path);
CommandOutcome cmd_feasibility(const FeasibilityOptions& options);
CommandOutcome cmd_eggleton(const EggletonOptions& options);

// Parses argv, runs one subcommand, writes its report (or document, with
// --machine) to `out` and diagnostics to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace semigrace::cli
