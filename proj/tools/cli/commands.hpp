#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "records.hpp"

namespace quartic::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io_failure = 1;
inline constexpr int parse_errors = 2;
inline constexpr int disagreement = 3;
}  // namespace exit_code

struct RunFlags {
  double tol = 1e-7;
  bool polish = true;
  std::optional<Format> format;  // output format for solve; defaults to the input format
  bool timing = true;            // false writes time_ns = 0 for byte-reproducible output
};

/// Solves every record of input_path and writes one result per record to
/// output_path ("-" for out). Diagnostics go to err.
int cmd_solve(const std::string& input_path, const std::string& output_path, const RunFlags& flags,
              std::ostream& out, std::ostream& err);

/// Solves every record with both the closed form and the bisection oracle and
/// reports per-record agreement plus a summary line.
int cmd_check(const std::string& input_path, const RunFlags& flags, std::ostream& out, std::ostream& err);

/// Outcome of comparing two ascending real-root lists (with repetition).
struct Agreement {
  bool agree;
  double deviation;  // max |x - y| / max(1, |y|); infinity on a count mismatch
};
Agreement compare_real_roots(const std::vector<double>& solver, const std::vector<double>& oracle, double tol);

enum class Regime { AllReal, Mixed, Biquadratic };
std::optional<Regime> parse_regime(const std::string& name);
std::string regime_name(Regime r);

struct BenchConfig {
  std::size_t count = 10000;
  std::uint64_t seed = 42;
  Regime regime = Regime::AllReal;
  bool polish = true;
};

struct TimingStats {
  std::size_t count = 0;
  double mean_ns = 0.0;
  double median_ns = 0.0;
};

struct BranchStats {
  std::string branch;
  double frequency = 0.0;  // fraction of instances
  TimingStats timing;
};

struct BenchReport {
  BenchConfig config;
  TimingStats closed_form;
  TimingStats oracle;
  std::vector<BranchStats> branches;  // in Branch enum order, observed branches only
  double checksum = 0.0;

  double speedup() const { return closed_form.mean_ns > 0 ? oracle.mean_ns / closed_form.mean_ns : 0.0; }
};

BenchReport run_bench(const BenchConfig& config);
void print_bench(const BenchReport& report, std::ostream& out);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
