#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <quartic/generators.hpp>
#include <quartic/oracle.hpp>
#include <quartic/solve.hpp>

namespace quartic::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

struct Loaded {
  Format format;
  std::vector<ParsedLine> lines;
};

std::optional<Loaded> load_jobs(const std::string& path, std::ostream& err) {
  const auto content = read_file(path);
  if (!content) {
    err << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  const Format fmt = format_from_extension(path).value_or(sniff_format(*content));
  return Loaded{fmt, parse_jobs(*content, fmt)};
}

SolveOptions<double> options_for(const JobRecord& job, const RunFlags& flags) {
  SolveOptions<double> opts;
  opts.polish = job.options.polish.value_or(flags.polish);
  return opts;
}

std::string fmt_g(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

int cmd_solve(const std::string& input_path, const std::string& output_path, const RunFlags& flags,
              std::ostream& out, std::ostream& err) {
  const auto loaded = load_jobs(input_path, err);
  if (!loaded) return exit_code::io_failure;
  const Format out_format = flags.format.value_or(loaded->format);

  std::ofstream file;
  std::ostream* sink = &out;
  if (output_path != "-") {
    file.open(output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << output_path << "\n";
      return exit_code::io_failure;
    }
    sink = &file;
  }

  bool any_error = false;
  if (out_format == Format::Csv) *sink << csv_header() << "\n";
  for (const auto& line : loaded->lines) {
    ResultRecord record;
    if (const auto* bad = std::get_if<ParseError>(&line)) {
      record = make_error(bad->id, bad->message);
      any_error = true;
    } else {
      const auto& job = std::get<JobRecord>(line);
      try {
        const RawCoefficients<double> raw(job.coeffs);
        const auto start = Clock::now();
        const auto report = solve(raw, options_for(job, flags));
        const auto stop = Clock::now();
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        record = make_result(job.id, report, flags.timing ? ns : 0);
      } catch (const std::exception& e) {
        record = make_error(job.id, e.what());
        any_error = true;
      }
    }
    *sink << (out_format == Format::Csv ? to_csv(record) : to_jsonl(record)) << "\n";
  }

  sink->flush();
  if (!*sink) {
    err << "error: failed writing " << output_path << "\n";
    return exit_code::io_failure;
  }
  return any_error ? exit_code::parse_errors : exit_code::ok;
}

Agreement compare_real_roots(const std::vector<double>& solver, const std::vector<double>& oracle, double tol) {
  if (solver.size() != oracle.size()) return {false, std::numeric_limits<double>::infinity()};
  double dev = 0.0;
  for (std::size_t i = 0; i < solver.size(); ++i) {
    dev = std::max(dev, std::abs(solver[i] - oracle[i]) / std::max(1.0, std::abs(oracle[i])));
  }
  return {dev <= tol, dev};
}

int cmd_check(const std::string& input_path, const RunFlags& flags, std::ostream& out, std::ostream& err) {
  const auto loaded = load_jobs(input_path, err);
  if (!loaded) return exit_code::io_failure;

  std::size_t total = 0;
  std::size_t agreed = 0;
  bool any_error = false;
  double worst = 0.0;
  std::string worst_id;

  for (const auto& line : loaded->lines) {
    if (const auto* bad = std::get_if<ParseError>(&line)) {
      out << bad->id << " error: " << bad->message << "\n";
      any_error = true;
      continue;
    }
    const auto& job = std::get<JobRecord>(line);
    std::vector<double> solver_roots;
    std::vector<double> oracle_roots;
    try {
      const RawCoefficients<double> raw(job.coeffs);
      const auto opts = options_for(job, flags);
      const auto normalized = normalize(raw, opts.eps_lead);
      std::span<const double> trailing;
      if (const auto* m = std::get_if<MonicQuartic<double>>(&normalized)) {
        solver_roots = solve_quartic(*m, opts).roots.expanded_real();
        trailing = m->trailing();
      } else {
        const auto& lower = std::get<LowerDegreeProblem<double>>(normalized);
        solver_roots = solve(raw, opts).roots.expanded_real();
        trailing = lower.trailing();
      }
      if (!trailing.empty()) {
        for (const auto& r : oracle::real_roots_monic<double>(trailing)) {
          for (int k = 0; k < r.multiplicity; ++k) oracle_roots.push_back(r.value);
        }
      }
    } catch (const std::exception& e) {
      out << job.id << " error: " << e.what() << "\n";
      any_error = true;
      continue;
    }

    ++total;
    const auto agreement = compare_real_roots(solver_roots, oracle_roots, job.options.tol.value_or(flags.tol));
    if (agreement.agree) ++agreed;
    if (worst_id.empty() || agreement.deviation > worst) {
      worst = agreement.deviation;
      worst_id = job.id;
    }
    out << job.id << (agreement.agree ? " agree" : " DISAGREE") << " deviation=" << fmt_g(agreement.deviation, 3)
        << " real=" << solver_roots.size() << "/" << oracle_roots.size() << "\n";
  }

  out << agreed << "/" << total << " agree";
  if (total > 0) out << ", max deviation " << fmt_g(worst, 3) << ", worst id " << worst_id;
  out << "\n";

  if (any_error) return exit_code::parse_errors;
  return agreed == total ? exit_code::ok : exit_code::disagreement;
}

std::optional<Regime> parse_regime(const std::string& name) {
  if (name == "all-real") return Regime::AllReal;
  if (name == "mixed") return Regime::Mixed;
  if (name == "biquadratic") return Regime::Biquadratic;
  return std::nullopt;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::AllReal: return "all-real";
    case Regime::Mixed: return "mixed";
    case Regime::Biquadratic: return "biquadratic";
  }
  return "?";
}

namespace {

TimingStats summarize(std::vector<double> ns) {
  TimingStats s;
  s.count = ns.size();
  if (ns.empty()) return s;
  double sum = 0.0;
  for (double v : ns) sum += v;
  s.mean_ns = sum / static_cast<double>(ns.size());
  const auto mid = ns.begin() + static_cast<std::ptrdiff_t>(ns.size() / 2);
  std::nth_element(ns.begin(), mid, ns.end());
  s.median_ns = *mid;
  if (ns.size() % 2 == 0) {
    s.median_ns = (s.median_ns + *std::max_element(ns.begin(), mid)) / 2.0;
  }
  return s;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  report.config = config;

  std::mt19937_64 rng(config.seed);
  std::vector<MonicQuartic<double>> problems;
  problems.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    switch (config.regime) {
      case Regime::AllReal: problems.push_back(gen::real_rooted<double>(rng).poly); break;
      case Regime::Mixed: problems.push_back(gen::uniform_coefficients<double>(rng)); break;
      case Regime::Biquadratic: problems.push_back(gen::biquadratic<double>(rng)); break;
    }
  }

  SolveOptions<double> opts;
  opts.polish = config.polish;
  std::vector<double> closed_ns;
  std::vector<double> oracle_ns;
  std::map<Branch, std::vector<double>> per_branch;
  closed_ns.reserve(problems.size());
  oracle_ns.reserve(problems.size());
  double checksum = 0.0;

  for (const auto& m : problems) {
    const auto start = Clock::now();
    const auto solved = solve_quartic(m, opts);
    const auto stop = Clock::now();
    const double ns = static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    closed_ns.push_back(ns);
    per_branch[solved.branch].push_back(ns);
    if (!solved.roots.real_roots.empty()) checksum += solved.roots.real_roots.front().value;
  }
  for (const auto& m : problems) {
    const auto start = Clock::now();
    const auto roots = oracle::oracle_real_roots(m);
    const auto stop = Clock::now();
    oracle_ns.push_back(
        static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    if (!roots.empty()) checksum -= roots.front().value;
  }

  report.closed_form = summarize(std::move(closed_ns));
  report.oracle = summarize(std::move(oracle_ns));
  for (auto& [branch, samples] : per_branch) {
    BranchStats stats;
    stats.branch = std::string(to_string(branch));
    stats.frequency = static_cast<double>(samples.size()) / static_cast<double>(problems.size());
    stats.timing = summarize(std::move(samples));
    report.branches.push_back(std::move(stats));
  }
  report.checksum = checksum;
  return report;
}

void print_bench(const BenchReport& r, std::ostream& out) {
  out << "regime=" << regime_name(r.config.regime) << " count=" << r.config.count << " seed=" << r.config.seed
      << " polish=" << (r.config.polish ? "on" : "off") << "\n";
  out << "closed-form mean_ns=" << fmt_g(r.closed_form.mean_ns) << " median_ns=" << fmt_g(r.closed_form.median_ns)
      << "\n";
  out << "oracle      mean_ns=" << fmt_g(r.oracle.mean_ns) << " median_ns=" << fmt_g(r.oracle.median_ns) << "\n";
  out << "speedup (oracle mean / closed-form mean) = " << fmt_g(r.speedup(), 4) << "\n";
  for (const auto& b : r.branches) {
    out << "branch " << b.branch << " frequency=" << fmt_g(100.0 * b.frequency, 5) << "% mean_ns="
        << fmt_g(b.timing.mean_ns) << " median_ns=" << fmt_g(b.timing.median_ns) << "\n";
  }
  const BranchStats* trig = nullptr;
  const BranchStats* cardano = nullptr;
  for (const auto& b : r.branches) {
    if (b.branch == "Trig") trig = &b;
    if (b.branch == "Cardano") cardano = &b;
  }
  if (trig && cardano && cardano->timing.mean_ns > 0) {
    out << "trig/cardano mean time ratio = " << fmt_g(trig->timing.mean_ns / cardano->timing.mean_ns, 4) << "\n";
  }
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
  if (config.count == 0) {
    err << "error: --count must be positive\n";
    return exit_code::parse_errors;
  }
  print_bench(run_bench(config), out);
  return exit_code::ok;
}

}  // namespace quartic::cli
