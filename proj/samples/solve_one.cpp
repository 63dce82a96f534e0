// Solves x^4 - 11x^3 + 41x^2 - 61x + 30 = (x-1)(x-2)(x-3)(x-5) and prints the report.

#include <cstdio>
#include <string>

#include <quartic.hpp>

int main() {
  const quartic::MonicQuartic<double> m(-11.0, 41.0, -61.0, 30.0);
  const auto report = quartic::solve_quartic(m);

  std::printf("branch: %s\n", std::string(quartic::to_string(report.branch)).c_str());
  std::printf("class:  %s\n", std::string(quartic::to_string(report.roots.classification)).c_str());
  for (const auto& r : report.roots.real_roots) std::printf("  root %.15g (x%d)\n", r.value, r.multiplicity);
  for (const auto& c : report.roots.complex_pairs) std::printf("  pair %.15g +/- %.15gi\n", c.re, c.im);
  std::printf("max residual: %g\n", report.max_residual);

  // The explicit single-expression formulas give the same four roots.
  const auto explicit_roots = quartic::explicit_roots_monolithic(m);
  std::printf("explicit: %.15g %.15g %.15g %.15g\n", explicit_roots[0], explicit_roots[1], explicit_roots[2],
              explicit_roots[3]);
}
