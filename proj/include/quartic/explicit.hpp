#pragma once

// The four real roots written as single expressions in a, b, c, d. Nothing
// from the staged pipeline is reused; this exists to cross-check it.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>

#include "poly.hpp"

namespace quartic {

namespace detail {

template <std::floating_point T>
T checked_sqrt(T x, T scale) {
  if (x >= T(0)) return std::sqrt(x);
  if (x >= -T(1e-12) * (T(1) + scale)) return T(0);
  throw domain_error("explicit_roots_monolithic: negative radicand");
}

template <std::floating_point T>
T checked_acos(T x) {
  if (std::abs(x) > T(1) + T(1e-12)) throw domain_error("explicit_roots_monolithic: acos argument outside [-1, 1]");
  return std::acos(std::clamp(x, T(-1), T(1)));
}

// -a/4 + outer * sqrt(W)/2 + inner * sqrt(V + ratio_sign * N / sqrt(W)) / 2
template <std::floating_point T>
T explicit_root(T a, T b, T c, T d, T outer, T inner, T ratio_sign) {
  const T d0_scale = b * b + T(12) * std::abs(d) + T(3) * std::abs(a * c);
  const T cos_term = std::cos(
      checked_acos((T(27) * a * a * d - T(9) * a * b * c + T(2) * b * b * b - T(72) * b * d + T(27) * c * c) /
                   ((-T(6) * a * c + T(2) * b * b + T(24) * d) *
                    checked_sqrt(-T(3) * a * c + b * b + T(12) * d, d0_scale))) /
      T(3));
  const T root_d0 = checked_sqrt(-T(3) * a * c + b * b + T(12) * d, d0_scale);
  const T w = a * a / T(4) - T(2) * b / T(3) + T(2) / T(3) * root_d0 * cos_term;
  const T root_w = checked_sqrt(w, a * a + std::abs(b));
  const T v = a * a / T(2) - T(4) * b / T(3) - T(2) / T(3) * root_d0 * cos_term;
  const T n = a * a * a / T(4) - a * b + T(2) * c;
  const T inner_radicand = v + ratio_sign * n / root_w;
  return -a / T(4) + outer * root_w / T(2) +
         inner * checked_sqrt(inner_radicand, std::abs(v) + std::abs(n / root_w)) / T(2);
}

}  // namespace detail

/// lambda_1..lambda_4 in the formulas' own order:
///   lambda_{1,4} = -a/4 -/+ sqrt(W)/2 -/+ sqrt(V +/- N/sqrt(W))/2
///   lambda_{2,3} = -a/4 -/+ sqrt(W)/2 +/- sqrt(V +/- N/sqrt(W))/2
/// Valid only when all four roots are real (delta0 > 0, cubic_disc < 0, q != 0);
/// throws domain_error if a radicand or the acos argument leaves its real domain
/// by more than rounding noise.
template <std::floating_point T>
std::array<T, 4> explicit_roots_monolithic(const MonicQuartic<T>& m) {
  const T a = m.a(), b = m.b(), c = m.c(), d = m.d();
  return {
      detail::explicit_root(a, b, c, d, T(-1), T(-1), T(1)),
      detail::explicit_root(a, b, c, d, T(-1), T(1), T(1)),
      detail::explicit_root(a, b, c, d, T(1), T(-1), T(-1)),
      detail::explicit_root(a, b, c, d, T(1), T(1), T(-1)),
  };
}

}  // namespace quartic
