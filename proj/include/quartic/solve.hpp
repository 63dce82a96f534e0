#pragma once

// End-to-end solvers: solve_quartic runs the closed-form pipeline on a monic
// quartic; solve() accepts raw coefficients and also covers the lower-degree
// fallbacks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cubic.hpp"
#include "polish.hpp"
#include "poly.hpp"
#include "quartic.hpp"
#include "root_set.hpp"

namespace quartic {

enum class Branch { Trig, Cardano, TripleRoot, Biquadratic, Cubic, Quadratic, Linear, Constant };

constexpr std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Trig: return "Trig";
    case Branch::Cardano: return "Cardano";
    case Branch::TripleRoot: return "TripleRoot";
    case Branch::Biquadratic: return "Biquadratic";
    case Branch::Cubic: return "Cubic";
    case Branch::Quadratic: return "Quadratic";
    case Branch::Linear: return "Linear";
    case Branch::Constant: return "Constant";
  }
  return "?";
}

template <std::floating_point T = double>
struct SolveOptions {
  bool polish = true;
  int polish_iterations = 2;
  T eps_lead = T(default_eps_lead);
  // |q| <= q_band * (1 + |p|^1.5 + |r|^0.75) takes the biquadratic path.
  T q_band = T(1e-12);
  T radicand_band = T(1e-10);
  ResolventTolerances<T> resolvent{};
  CubicOptions<T> cubic{};
};

template <std::floating_point T = double>
struct SolveReport {
  RootSet<T> roots;
  Branch branch = Branch::Constant;
  std::optional<ResolventData<T>> resolvent;
  std::vector<T> residuals;          // one per entry of roots.real_roots
  std::vector<T> complex_residuals;  // one per entry of roots.complex_pairs
  T max_residual = T(0);
  int polish_iterations = 0;
  int polish_flagged = 0;
  // The closed-form Z came out non-positive and was recomputed by Newton.
  bool resolvent_refined = false;
};

namespace detail {

template <std::floating_point T>
void fill_residuals(SolveReport<T>& report, std::span<const T> monic_trailing) {
  report.residuals.clear();
  report.complex_residuals.clear();
  report.max_residual = T(0);
  for (const auto& r : report.roots.real_roots) {
    const T res = scaled_residual<T>(monic_trailing, r.value);
    report.residuals.push_back(res);
    report.max_residual = std::max(report.max_residual, res);
  }
  for (const auto& c : report.roots.complex_pairs) {
    const T res = scaled_residual<T>(monic_trailing, std::complex<T>(c.re, c.im));
    report.complex_residuals.push_back(res);
    report.max_residual = std::max(report.max_residual, res);
  }
}

// x^2 + u*x + v with the stable quadratic formula.
template <std::floating_point T>
void push_quadratic(RootSet<T>& set, T u, T v, T band) {
  const T disc = u * u - T(4) * v;
  if (std::abs(disc) <= band * (T(1) + u * u + T(4) * std::abs(v))) {
    set.real_roots.push_back({-u / T(2), 2});
    set.near_boundary = true;
  } else if (disc > T(0)) {
    const T s = std::sqrt(disc);
    const T x1 = -(u + std::copysign(s, u)) / T(2);
    set.real_roots.push_back({x1, 1});
    set.real_roots.push_back({v / x1, 1});
  } else {
    set.complex_pairs.push_back({-u / T(2), std::sqrt(-disc) / T(2)});
  }
}

template <std::floating_point T>
SolveReport<T> solve_lower(const LowerDegreeProblem<T>& lower, const SolveOptions<T>& opts) {
  SolveReport<T> report;
  RootSet<T>& set = report.roots;
  set.degree = lower.degree;
  const auto& c = lower.coeffs;
  switch (lower.degree) {
    case 3: {
      report.branch = Branch::Cubic;
      set.degenerate = DegenerateKind::Cubic;
      const MonicCubic<T> cubic(c[0], c[1], c[2]);
      set.real_roots = solve_cubic(cubic, opts.cubic);
      if (set.real_roots.size() == 1 && set.real_roots[0].multiplicity == 1) {
        // Deflate by the real root: x^3 + al x^2 + be x + ga = (x - x0)(x^2 + u x + v).
        const T x0 = set.real_roots[0].value;
        const T u = c[0] + x0;
        const T v = c[1] + x0 * u;
        push_quadratic(set, u, v, opts.radicand_band);
      }
      break;
    }
    case 2:
      report.branch = Branch::Quadratic;
      set.degenerate = DegenerateKind::Quadratic;
      push_quadratic(set, c[0], c[1], opts.radicand_band);
      break;
    case 1:
      report.branch = Branch::Linear;
      set.degenerate = DegenerateKind::Linear;
      set.real_roots.push_back({-c[0], 1});
      break;
    default:
      report.branch = Branch::Constant;
      set.degenerate = DegenerateKind::Constant;
      set.degree = 0;
      break;
  }
  finalize(set);
  fill_residuals<T>(report, lower.trailing());
  return report;
}

}  // namespace detail

/// Closed-form solve of a monic quartic.
///
/// depress -> (|q| in its zero band ? biquadratic
///             : delta invariants -> resolvent Z -> root assembly) -> polish.
template <std::floating_point T>
SolveReport<T> solve_quartic(const MonicQuartic<T>& m, const SolveOptions<T>& opts = {}) {
  SolveReport<T> report;
  const DepressedQuartic<T> dep = depress(m);
  const T q_scale = T(1) + std::pow(std::abs(dep.p), T(1.5)) + std::pow(std::abs(dep.r), T(0.75));

  if (std::abs(dep.q) <= opts.q_band * q_scale) {
    report.branch = Branch::Biquadratic;
    report.roots = solve_biquadratic(dep.p, dep.r, dep.shift, opts.radicand_band);
  } else {
    const auto [delta0, delta1] = delta_invariants(m);
    ResolventData<T> res = resolvent_z(dep.p, delta0, delta1, opts.resolvent);
    if (!(res.Z > T(0))) {
      res.Z = refine_resolvent_root(dep.p, dep.q, dep.r);
      report.resolvent_refined = true;
    }
    switch (res.branch) {
      case ResolventBranch::Trig: report.branch = Branch::Trig; break;
      case ResolventBranch::Cardano: report.branch = Branch::Cardano; break;
      case ResolventBranch::TripleRoot: report.branch = Branch::TripleRoot; break;
    }
    const ShiftedCoeffs<T> sc = shifted_coeffs(m);
    report.roots = assemble_roots(m.a(), sc.A, sc.B, res.Z, AssembleTolerances<T>{opts.radicand_band});
    report.resolvent = res;
  }

  if (opts.polish && opts.polish_iterations > 0) {
    auto polished = polish(m, std::move(report.roots), opts.polish_iterations);
    report.roots = std::move(polished.roots);
    report.polish_iterations = polished.iterations;
    report.polish_flagged = polished.flagged;
  }

  for (const auto& r : report.roots.real_roots) {
    if (!std::isfinite(r.value)) throw domain_error("solve_quartic: non-finite root");
  }
  detail::fill_residuals<T>(report, m.trailing());
  return report;
}

/// Normalizes raw coefficients and dispatches to the quartic pipeline or the
/// lower-degree fallback.
template <std::floating_point T>
SolveReport<T> solve(const RawCoefficients<T>& raw, const SolveOptions<T>& opts = {}) {
  const Normalized<T> normalized = normalize(raw, opts.eps_lead);
  if (const auto* m = std::get_if<MonicQuartic<T>>(&normalized)) return solve_quartic(*m, opts);
  return detail::solve_lower(std::get<LowerDegreeProblem<T>>(normalized), opts);
}

}  // namespace quartic
