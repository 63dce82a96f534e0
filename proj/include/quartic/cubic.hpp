#pragma once

// Real roots of x^3 + alpha*x^2 + beta*x + gamma. Cardano's formula covers the
// one-real-root regime, the cosine method the three-real-root regime.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <vector>

#include "poly.hpp"
#include "root_set.hpp"

namespace quartic {

template <std::floating_point T = double>
class MonicCubic {
 public:
  MonicCubic(T alpha, T beta, T gamma) : c_{alpha, beta, gamma} {
    detail::require_finite(c_, "MonicCubic");
  }

  T alpha() const { return c_[0]; }
  T beta() const { return c_[1]; }
  T gamma() const { return c_[2]; }
  std::span<const T> trailing() const { return c_; }

  bool operator==(const MonicCubic&) const = default;

 private:
  std::array<T, 3> c_;
};

template <std::floating_point T, typename X>
X evaluate(const MonicCubic<T>& m, X x) {
  return detail::horner_monic<T>(m.trailing(), x);
}

template <std::floating_point T = double>
struct CardanoIntermediates {
  T Q;
  T R;
  T s1;
  T s2;
  T x0;
};

template <std::floating_point T>
T cardano_Q(const MonicCubic<T>& m) {
  return (T(3) * m.beta() - m.alpha() * m.alpha()) / T(9);
}

template <std::floating_point T>
T cardano_R(const MonicCubic<T>& m) {
  const T al = m.alpha();
  return (T(9) * al * m.beta() - T(27) * m.gamma() - T(2) * al * al * al) / T(54);
}

/// Q, R, s1, s2 and x0 = s1 + s2 - alpha/3. Requires R^2 + Q^3 >= 0.
///
/// s1 and s2 are the cube roots of R +/- sqrt(R^2 + Q^3). The one whose
/// radicand adds same-signed terms is taken directly; the other comes from
/// s1*s2 = -Q, which avoids the cancellation in R - sqrt(R^2 + Q^3).
template <std::floating_point T>
CardanoIntermediates<T> cardano_intermediates(const MonicCubic<T>& m) {
  const T Q = cardano_Q(m);
  const T R = cardano_R(m);
  const T disc = R * R + Q * Q * Q;
  if (disc < T(0)) throw domain_error("cardano_real_root: R^2 + Q^3 < 0, three real roots");

  const T root = std::sqrt(disc);
  T s1;
  T s2;
  if (R >= T(0)) {
    s1 = std::cbrt(R + root);
    s2 = s1 != T(0) ? -Q / s1 : T(0);
  } else {
    s2 = std::cbrt(R - root);
    s1 = s2 != T(0) ? -Q / s2 : T(0);
  }
  return {Q, R, s1, s2, s1 + s2 - m.alpha() / T(3)};
}

template <std::floating_point T>
T cardano_real_root(const MonicCubic<T>& m) {
  return cardano_intermediates(m).x0;
}

template <std::floating_point T = double>
struct CubicOptions {
  // Repeated-root band on R^2 + Q^3, relative to max(R^2, |Q|^3).
  T tol_disc = T(1e-12);
  int polish_steps = 1;
};

namespace detail {

template <std::floating_point T>
T cubic_derivative(const MonicCubic<T>& m, T x) {
  return (T(3) * x + T(2) * m.alpha()) * x + m.beta();
}

// Newton steps that are only kept while |P| decreases.
template <std::floating_point T>
T newton_cubic(const MonicCubic<T>& m, T x, int steps) {
  T fx = evaluate(m, x);
  for (int i = 0; i < steps && fx != T(0); ++i) {
    const T df = cubic_derivative(m, x);
    const T scale = T(3) * x * x + T(2) * std::abs(m.alpha() * x) + std::abs(m.beta());
    if (std::abs(df) <= T(1e-9) * scale || df == T(0)) break;
    const T next = x - fx / df;
    const T fnext = evaluate(m, next);
    if (!std::isfinite(next) || std::abs(fnext) >= std::abs(fx)) break;
    x = next;
    fx = fnext;
  }
  return x;
}

}  // namespace detail

/// Real roots in ascending order with multiplicities (summing to 1 or 3).
template <std::floating_point T>
std::vector<RealRoot<T>> solve_cubic(const MonicCubic<T>& m, const CubicOptions<T>& opts = {}) {
  const T Q = cardano_Q(m);
  const T R = cardano_R(m);
  const T disc = R * R + Q * Q * Q;
  const T shift = m.alpha() / T(3);
  const T scale = std::max({R * R, std::abs(Q * Q * Q), std::numeric_limits<T>::min()});

  std::vector<RealRoot<T>> roots;
  if (std::abs(disc) <= opts.tol_disc * scale) {
    // Repeated root: depressed roots 2s and -s (double) with s = cbrt(R).
    const T s = std::cbrt(R);
    const T single = T(2) * s - shift;
    const T twice = -s - shift;
    if (std::abs(single - twice) <= T(1e-7) * (T(1) + std::abs(shift))) {
      roots.push_back({-shift, 3});
    } else {
      roots.push_back({detail::newton_cubic(m, single, opts.polish_steps), 1});
      roots.push_back({twice, 2});
    }
  } else if (disc > T(0)) {
    roots.push_back({detail::newton_cubic(m, cardano_real_root(m), opts.polish_steps), 1});
  } else {
    // Q < 0 here since R^2 >= 0 > R^2 + Q^3.
    const T rq = std::sqrt(-Q);
    const T arg = std::clamp(R / (rq * rq * rq), T(-1), T(1));
    const T theta = std::acos(arg);
    constexpr T two_pi = T(2) * std::numbers::pi_v<T>;
    for (int k = 0; k < 3; ++k) {
      const T x = T(2) * rq * std::cos((theta + two_pi * T(k)) / T(3)) - shift;
      roots.push_back({detail::newton_cubic(m, x, opts.polish_steps), 1});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot<T>& x, const RealRoot<T>& y) { return x.value < y.value; });
  return roots;
}

}  // namespace quartic
