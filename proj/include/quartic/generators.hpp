#pragma once

// Random problem generators shared by the benchmark and the test suites.

#include <algorithm>
#include <array>
#include <concepts>
#include <random>

#include "poly.hpp"

namespace quartic::gen {

/// Monic coefficients of prod (x - roots[i]) via Vieta's formulas.
template <std::floating_point T>
MonicQuartic<T> from_roots(const std::array<T, 4>& r) {
  const T e1 = r[0] + r[1] + r[2] + r[3];
  const T e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
  const T e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
  const T e4 = r[0] * r[1] * r[2] * r[3];
  return MonicQuartic<T>(-e1, e2, -e3, e4);
}

template <std::floating_point T = double>
struct ConstructedQuartic {
  std::array<T, 4> roots;  // ascending
  MonicQuartic<T> poly;
};

/// Four independent uniform roots in [lo, hi].
template <std::floating_point T = double, typename Rng>
ConstructedQuartic<T> real_rooted(Rng& rng, T lo = T(-10), T hi = T(10)) {
  std::uniform_real_distribution<T> dist(lo, hi);
  std::array<T, 4> roots{};
  for (auto& r : roots) r = dist(rng);
  std::sort(roots.begin(), roots.end());
  return {roots, from_roots(roots)};
}

/// Coefficients a, b, c, d uniform in [lo, hi].
template <std::floating_point T = double, typename Rng>
MonicQuartic<T> uniform_coefficients(Rng& rng, T lo = T(-100), T hi = T(100)) {
  std::uniform_real_distribution<T> dist(lo, hi);
  const T a = dist(rng);
  const T b = dist(rng);
  const T c = dist(rng);
  const T d = dist(rng);
  return MonicQuartic<T>(a, b, c, d);
}

/// A quartic whose depressed form has q = 0 exactly: integer a and b keep
/// c = a*b/2 - a^3/8 and its depression free of rounding.
template <std::floating_point T = double, typename Rng>
MonicQuartic<T> biquadratic(Rng& rng) {
  std::uniform_int_distribution<int> small(-12, 12);
  std::uniform_real_distribution<T> dist(T(-100), T(100));
  const T a = T(small(rng));
  const T b = T(small(rng));
  const T c = a * b / T(2) - a * a * a / T(8);
  return MonicQuartic<T>(a, b, c, dist(rng));
}

}  // namespace quartic::gen
