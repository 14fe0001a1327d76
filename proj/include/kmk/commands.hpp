#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kmk::cli {

enum class Format { json, tsv };

// Default --seed.
inline constexpr std::uint64_t kDefaultSeed = 20160406;

// Invalid arguments; the command-line tool exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Report {
  std::string text;
  int exit_code = 0;  // 0 pass, 1 verification mismatch
};

// θ_g(k) and the closed form of Φ_g for g = 1..g_max.
Report run_theta(int g_max, Format format);
// Closed forms of Φ_g for g = 0..g_max; optionally the operator-chain iterates.
Report run_phi(int g_max, Format format, bool dump_ansatz = false);
// Exact moment polynomials for k = 1..k_max.
Report run_moments(int k_max, Format format);
// Oracle agreement and structural checks; exit_code 1 on any mismatch.
Report run_verify(int g_max, int k_max, Format format);
// Monte Carlo estimate of the 2k-th moment against the exact prediction.
Report run_sample(int n, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads, Format format);

}  // namespace kmk::cli
