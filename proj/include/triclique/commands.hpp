#pragma once

#include <optional>
#include <string>

namespace triclique {

inline constexpr const char* kToolName = "triclique";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by the CLI and the in-process runner.
/// 0 success, 2 parse/input error, 3 size cap exceeded, 4 oracle
/// disagreement. Nothing else is used.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitDisagreement = 4;

struct CliOptions {
    std::string command;      // triconcepts | switching | mccs | check
    std::string input_path;   // context or mrd file; empty when gen is set
    std::string gen;          // power:N | diag:M
    std::string method = "both";               // brute | fixpoint | both
    std::string count_convention = "product";  // product | componentwise
    std::string format = "structured";         // structured | table
    std::optional<int> size_cap;               // per-axis override
};

struct CliResult {
    int exit_code = 0;
    std::string output; // report (structured JSON or table) or error text
};

/// Runs one subcommand end to end. Never throws; failures are encoded in
/// the exit code. Reports are byte-identical across runs for identical
/// inputs and flags.
CliResult run_command(const CliOptions& opts);

} // namespace triclique
