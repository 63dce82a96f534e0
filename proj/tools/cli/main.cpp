#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace quartic::cli;

  CLI::App app{"Closed-form quartic root solver"};
  app.require_subcommand(1);

  RunFlags flags;
  std::string format_name;
  bool no_polish = false;
  bool no_timing = false;

  std::string solve_input;
  std::string solve_output = "-";
  auto* solve_cmd = app.add_subcommand("solve", "Solve every record of a CSV or JSON-lines file");
  solve_cmd->add_option("input", solve_input, "Input file (id,e4,e3,e2,e1,e0 per line, or JSON lines)")->required();
  solve_cmd->add_option("output", solve_output, "Output file, '-' for stdout");
  solve_cmd->add_option("--format", format_name, "Output format: csv or jsonl (default: input format)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  solve_cmd->add_flag("--no-polish", no_polish, "Skip Newton polishing");
  solve_cmd->add_flag("--no-timing", no_timing, "Write time_ns = 0 so output is reproducible");
  solve_cmd->add_option("--tol", flags.tol, "Agreement tolerance (recorded, used by check)");

  std::string check_input;
  auto* check_cmd = app.add_subcommand("check", "Compare the closed form against the bisection oracle");
  check_cmd->add_option("input", check_input, "Input file")->required();
  check_cmd->add_option("--tol", flags.tol, "Relative agreement tolerance")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--no-polish", no_polish, "Skip Newton polishing");

  BenchConfig bench;
  std::string regime_name_arg = "all-real";
  auto* bench_cmd = app.add_subcommand("bench", "Time the closed form against the oracle on random quartics");
  bench_cmd->add_option("--count", bench.count, "Number of random quartics");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--regime", regime_name_arg, "all-real, mixed or biquadratic")
      ->check(CLI::IsMember({"all-real", "mixed", "biquadratic"}));
  bench_cmd->add_flag("--no-polish", no_polish, "Skip Newton polishing");

  CLI11_PARSE(app, argc, argv);

  flags.polish = !no_polish;
  flags.timing = !no_timing;
  if (!format_name.empty()) flags.format = parse_format_name(format_name);

  if (solve_cmd->parsed()) return cmd_solve(solve_input, solve_output, flags, std::cout, std::cerr);
  if (check_cmd->parsed()) return cmd_check(check_input, flags, std::cout, std::cerr);
  bench.regime = *parse_regime(regime_name_arg);
  bench.polish = !no_polish;
  return cmd_bench(bench, std::cout, std::cerr);
}
