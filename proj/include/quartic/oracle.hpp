#pragma once

// Independent real-root finder for testing. Shares no numerical code with the
// closed-form path: the real roots of P' split the line into intervals on
// which P is monotone, and each sign-changing interval is bisected. P' is
// handled the same way from P'', down to a linear polynomial.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <vector>

#include "poly.hpp"
#include "root_set.hpp"

namespace quartic::oracle {

inline constexpr double default_tol = 1e-12;

/// An interval on which the polynomial is monotone.
template <std::floating_point T = double>
struct Bracket {
  T lo;
  T hi;
  int sign_lo;
  int sign_hi;
};

namespace detail {

// Coefficients in descending order, leading term nonzero.
template <std::floating_point T>
struct Poly {
  std::vector<T> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  T operator()(T x) const {
    T acc = T(0);
    for (T v : c) acc = acc * x + v;
    return acc;
  }

  // sum |c_k| |x|^k, a bound on the size of rounding error in operator().
  T magnitude(T x) const {
    const T ax = std::abs(x);
    T acc = T(0);
    for (T v : c) acc = acc * ax + std::abs(v);
    return acc;
  }

  Poly derivative() const {
    Poly d;
    const int n = degree();
    for (int k = 0; k < n; ++k) d.c.push_back(c[static_cast<std::size_t>(k)] * T(n - k));
    return d;
  }

  // Cauchy bound: every real root lies in [-bound, bound].
  T root_bound() const {
    T worst = T(0);
    for (std::size_t k = 1; k < c.size(); ++k) worst = std::max(worst, std::abs(c[k] / c[0]));
    return T(1) + worst;
  }
};

template <std::floating_point T>
int sign_of(T v) {
  return (v > T(0)) - (v < T(0));
}

template <std::floating_point T>
T bisect(const Poly<T>& poly, Bracket<T> b, T tol) {
  T lo = b.lo;
  T hi = b.hi;
  while (hi - lo > tol) {
    const T mid = lo + (hi - lo) / T(2);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(poly(mid));
    if (s == 0) return mid;
    if (s == b.sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / T(2);
}

template <std::floating_point T>
std::vector<RealRoot<T>> real_roots(const Poly<T>& poly, T tol) {
  const int n = poly.degree();
  if (n <= 0) return {};
  if (n == 1) return {{-poly.c[1] / poly.c[0], 1}};

  const Poly<T> deriv = poly.derivative();
  const Poly<T> second = deriv.derivative();
  const std::vector<RealRoot<T>> critical = real_roots(deriv, tol);
  const T bound = poly.root_bound();
  constexpr T eps = std::numeric_limits<T>::epsilon();

  struct Node {
    T x;
    int sign;
  };
  std::vector<Node> nodes;
  std::vector<RealRoot<T>> out;

  nodes.push_back({-bound, sign_of(poly(-bound))});
  for (const auto& crit : critical) {
    const T x = std::clamp(crit.value, -bound, bound);
    const T value = poly(x);
    // A critical point where P vanishes up to rounding is a multiple root.
    const T zero_tol = T(64) * eps * poly.magnitude(x) + std::abs(second(x)) * tol * tol;
    if (std::abs(value) <= zero_tol) {
      out.push_back({x, crit.multiplicity + 1});
      nodes.push_back({x, 0});
    } else {
      nodes.push_back({x, sign_of(value)});
    }
  }
  nodes.push_back({bound, sign_of(poly(bound))});

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& left = nodes[i];
    const Node& right = nodes[i + 1];
    if (left.sign == 0 || right.sign == 0 || left.sign == right.sign) continue;
    if (!(left.x < right.x)) continue;
    // Endpoints pushed out by one ulp so a sign evaluated exactly at a
    // critical point cannot tie with the interior.
    Bracket<T> br{std::nextafter(left.x, -std::numeric_limits<T>::infinity()),
                  std::nextafter(right.x, std::numeric_limits<T>::infinity()), left.sign,
                  right.sign};
    if (sign_of(poly(br.lo)) != left.sign) br.lo = left.x;
    if (sign_of(poly(br.hi)) != right.sign) br.hi = right.x;
    out.push_back({bisect(poly, br, tol), 1});
  }

  std::sort(out.begin(), out.end(),
            [](const RealRoot<T>& x, const RealRoot<T>& y) { return x.value < y.value; });
  return out;
}

}  // namespace detail

/// Real roots of x^n + t[0] x^(n-1) + ... + t[n-1], ascending, with multiplicity.
template <std::floating_point T>
std::vector<RealRoot<T>> real_roots_monic(std::span<const T> trailing, T tol = T(default_tol)) {
  detail::Poly<T> poly;
  poly.c.push_back(T(1));
  poly.c.insert(poly.c.end(), trailing.begin(), trailing.end());
  return detail::real_roots(poly, tol);
}

template <std::floating_point T>
std::vector<RealRoot<T>> oracle_real_roots(const MonicQuartic<T>& m, T tol = T(default_tol)) {
  if (!(tol > T(0))) throw domain_error("oracle_real_roots: tol must be positive");
  return real_roots_monic<T>(m.trailing(), tol);
}

/// Largest real root of 8z^3 + 8pz^2 + (2p^2 - 8r)z - q^2, found by bisection.
/// It is positive whenever q != 0 since the cubic is -q^2 < 0 at z = 0.
template <std::floating_point T>
T oracle_resolvent_root(T p, T q, T r, T tol = T(default_tol)) {
  if (q == T(0)) throw domain_error("oracle_resolvent_root: q = 0");
  const T trailing[3] = {p, p * p / T(4) - r, -q * q / T(8)};
  const auto roots = real_roots_monic<T>(std::span<const T>(trailing, 3), tol);
  if (roots.empty() || !(roots.back().value > T(0))) {
    throw domain_error("oracle_resolvent_root: no positive root found");
  }
  return roots.back().value;
}

}  // namespace quartic::oracle
