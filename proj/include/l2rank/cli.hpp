#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace l2rank {

enum class OutputFormat { json, csv, text };

/// Everything one CLI invocation needs; filled by tools/l2rank.cpp.
struct RunConfig {
  std::string command;
  /// File paths or fixture names; `inline_presentations` are used verbatim.
  std::vector<std::string> inputs;
  std::vector<std::string> inline_presentations;

  int max_cosets = 10000;
  int max_degree = 5;
  int chain_length = 4;
  int max_quotients = 64;
  int order_cap = 5000;
  int jobs = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  std::string output_path;

  std::vector<std::string> kill_words;       // nrk-check
  std::vector<std::string> extension_words;  // fox, spectral
  std::string matrix;                        // snf (integer rows) or spectral (group ring)
  int quotient_order = 0;                    // spectral: pick the first quotient of this order
  int moments = 6;
  std::vector<double> eps_grid{0.5, 0.1, 0.01};
  double log_constant = 1.0;
  int max_radius = 4;
  int membership_budget = 2;
};

/// Exit codes: 0 success, 1 error, 2 inconclusive or budget exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one subcommand (betti1, fox, snf, sigma, pt-bound, nrk-check,
/// l2-approx, spectral, dist), writing the report to `out` (or the output
/// path) and diagnostics to `err`.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace l2rank
