#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <utility>

#include "poly.hpp"
#include "root_set.hpp"

namespace quartic {

template <std::floating_point T = double>
struct PolishResult {
  RootSet<T> roots;
  int iterations = 0;  // accepted Newton steps, summed over roots
  int flagged = 0;     // roots where Newton left its basin; kept unpolished
};

namespace detail {

// P'(x) and the sum of the magnitudes of its terms, for the guard threshold.
template <std::floating_point T>
std::pair<T, T> monic_derivative(std::span<const T> trailing, T x) {
  const int n = static_cast<int>(trailing.size());
  T value = T(n);
  T magnitude = T(n);
  const T ax = std::abs(x);
  for (int k = 0; k + 1 < n; ++k) {
    const T c = T(n - 1 - k) * trailing[static_cast<std::size_t>(k)];
    value = value * x + c;
    magnitude = magnitude * ax + std::abs(c);
  }
  return {value, magnitude};
}

template <std::floating_point T>
PolishResult<T> polish_monic(std::span<const T> trailing, RootSet<T> roots, int max_iter) {
  PolishResult<T> out;
  auto& reals = roots.real_roots;
  constexpr T guard = T(1e-9);

  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (reals[i].multiplicity != 1) continue;
    T x = reals[i].value;
    // Newton must not step more than halfway toward a neighbouring real root.
    T reach = std::numeric_limits<T>::infinity();
    if (i > 0) reach = std::min(reach, (x - reals[i - 1].value) / T(2));
    if (i + 1 < reals.size()) reach = std::min(reach, (reals[i + 1].value - x) / T(2));

    T fx = std::abs(horner_monic<T>(trailing, x));
    for (int it = 0; it < max_iter && fx != T(0); ++it) {
      const auto [df, df_scale] = monic_derivative(trailing, x);
      if (std::abs(df) <= guard * df_scale) break;
      const T next = x - horner_monic<T>(trailing, x) / df;
      if (!std::isfinite(next) || std::abs(next - reals[i].value) > reach) {
        ++out.flagged;
        x = reals[i].value;
        break;
      }
      const T fnext = std::abs(horner_monic<T>(trailing, next));
      if (fnext >= fx) break;
      x = next;
      fx = fnext;
      ++out.iterations;
    }
    reals[i].value = x;
  }
  detail::finalize(roots);
  out.roots = std::move(roots);
  return out;
}

}  // namespace detail

/// Newton iteration x <- x - P(x)/P'(x) on each simple real root, stopping when
/// |P| stops decreasing or after max_iter steps. Roots with |P'| below 1e-9 of
/// its term magnitude (near-multiple roots) are left alone. Classification is
/// unchanged.
template <std::floating_point T>
PolishResult<T> polish(const MonicQuartic<T>& m, RootSet<T> roots, int max_iter) {
  return detail::polish_monic<T>(m.trailing(), std::move(roots), max_iter);
}

}  // namespace quartic
