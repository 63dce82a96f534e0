#pragma once

// Closed-form quartic stages: depression, the Delta0/Delta1 invariants, the
// largest resolvent root Z = 2*z0 (trigonometric or Cardano form), and the
// final assembly of the four roots from a, A, B and Z.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <concepts>
#include <optional>
#include <string_view>
#include <utility>

#include "poly.hpp"
#include "root_set.hpp"

namespace quartic {

/// y^4 + p*y^2 + q*y + r with x = y - shift, shift = a/4.
template <std::floating_point T = double>
struct DepressedQuartic {
  T p;
  T q;
  T r;
  T shift;
};

template <std::floating_point T>
DepressedQuartic<T> depress(const MonicQuartic<T>& m) {
  const T s = m.a() / T(4);
  const T s2 = s * s;
  const T p = m.b() - T(6) * s2;
  const T q = m.c() - T(2) * m.b() * s + T(8) * (s2 * s);
  const T r = m.d() - m.c() * s + m.b() * s2 - T(3) * (s2 * s2);
  return {p, q, r, s};
}

/// A = 2p and B = 2q computed directly from the monic coefficients.
template <std::floating_point T = double>
struct ShiftedCoeffs {
  T A;
  T B;
};

template <std::floating_point T>
ShiftedCoeffs<T> shifted_coeffs(const MonicQuartic<T>& m) {
  const T a = m.a();
  const T a2 = a * a;
  // Same rounding sequence as depress(), scaled by two.
  const T A = T(2) * m.b() - T(3) * a2 / T(4);
  const T B = T(2) * m.c() - a * m.b() + (a2 * a) / T(4);
  return {A, B};
}

template <std::floating_point T = double>
struct DeltaInvariants {
  T delta0;
  T delta1;
};

template <std::floating_point T>
DeltaInvariants<T> delta_invariants(const MonicQuartic<T>& m) {
  const T a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const T delta0 = b * b + T(12) * d - T(3) * a * c;
  const T delta1 = T(27) * a * a * d - T(9) * a * b * c + T(2) * b * b * b - T(72) * b * d +
                   T(27) * c * c;
  return {delta0, delta1};
}

enum class ResolventBranch { Trig, Cardano, TripleRoot };

constexpr std::string_view to_string(ResolventBranch b) {
  switch (b) {
    case ResolventBranch::Trig: return "Trig";
    case ResolventBranch::Cardano: return "Cardano";
    case ResolventBranch::TripleRoot: return "TripleRoot";
  }
  return "?";
}

template <std::floating_point T = double>
struct ResolventData {
  T delta0;
  T delta1;
  T cubic_disc;  // delta1^2 - 4*delta0^3
  ResolventBranch branch;
  std::optional<T> phi;
  std::optional<T> S;
  T Z;  // 2*z0, twice the largest real root of the resolvent cubic
};

template <std::floating_point T = double>
struct ResolventTolerances {
  // |delta0| <= zero_band * (1 + |delta1|^(2/3)) counts as zero in the Cardano form.
  T zero_band = T(1e-13);
};

/// Twice the largest real root of 8z^3 + 8pz^2 + (2p^2 - 8r)z - q^2.
///
/// With cubic_disc < 0 the resolvent has three real roots and the cosine form
/// is used with phi/3 in [0, pi/3], which picks the largest. Otherwise the
/// Cardano form S = cbrt((delta1 + sign(delta1) sqrt(cubic_disc)) / 2) gives
/// the single real root (sign(0) taken as +1). Both invariants near zero means
/// a triple resolvent root at -p/3.
template <std::floating_point T>
ResolventData<T> resolvent_z(T p, T delta0, T delta1, const ResolventTolerances<T>& tol = {}) {
  if (!std::isfinite(p) || !std::isfinite(delta0) || !std::isfinite(delta1)) {
    throw domain_error("resolvent_z: non-finite input");
  }
  ResolventData<T> out{delta0, delta1, delta1 * delta1 - T(4) * delta0 * delta0 * delta0,
                       ResolventBranch::Cardano, std::nullopt, std::nullopt, T(0)};

  const bool delta0_zero =
      std::abs(delta0) <= tol.zero_band * (T(1) + std::cbrt(delta1 * delta1));
  const bool delta1_zero = std::abs(delta1) <= tol.zero_band * (T(1) + std::abs(p * p * p));

  if (out.cubic_disc < T(0)) {
    // 4*delta0^3 > delta1^2 >= 0 forces delta0 > 0.
    assert(delta0 > T(0));
    const T root_d0 = std::sqrt(delta0);
    const T arg = std::clamp(delta1 / (T(2) * delta0 * root_d0), T(-1), T(1));
    const T phi = std::acos(arg);
    out.branch = ResolventBranch::Trig;
    out.phi = phi;
    out.Z = (T(2) * root_d0 * std::cos(phi / T(3)) - T(2) * p) / T(3);
  } else if (delta0_zero && delta1_zero) {
    out.branch = ResolventBranch::TripleRoot;
    out.Z = -T(2) * p / T(3);
  } else if (delta0_zero) {
    const T S = std::cbrt(delta1);
    out.S = S;
    out.Z = (S - T(2) * p) / T(3);
  } else {
    const T sign = delta1 >= T(0) ? T(1) : T(-1);
    const T S = std::cbrt((delta1 + sign * std::sqrt(out.cubic_disc)) / T(2));
    out.S = S;
    out.Z = (S + delta0 / S - T(2) * p) / T(3);
  }

  if (!std::isfinite(out.Z)) throw domain_error("resolvent_z: non-finite resolvent root");
  return out;
}

/// Value of the resolvent cubic 8z^3 + 8pz^2 + (2p^2 - 8r)z - q^2.
template <std::floating_point T>
T resolvent_value(T p, T q, T r, T z) {
  return ((T(8) * z + T(8) * p) * z + (T(2) * p * p - T(8) * r)) * z - q * q;
}

/// Largest resolvent root by Newton iteration from above. Newton converges
/// monotonically there because the cubic is increasing and convex to the right
/// of its largest root (which is at least the mean root -p/3). Used only when
/// the closed form yields Z <= 0 for q != 0, which is a rounding artifact.
template <std::floating_point T>
T refine_resolvent_root(T p, T q, T r) {
  T z = T(1) + std::abs(p) + std::abs(p * p / T(4) - r) + q * q / T(8);
  for (int i = 0; i < 200; ++i) {
    const T f = resolvent_value(p, q, r, z);
    const T df = (T(24) * z + T(16) * p) * z + (T(2) * p * p - T(8) * r);
    if (f <= T(0) || !(df > T(0))) break;
    const T next = z - f / df;
    if (!(next < z)) break;
    z = next;
  }
  return T(2) * z;
}

template <std::floating_point T = double>
struct AssembleTolerances {
  // |radicand| <= radicand_band * (1 + |A| + Z) is treated as a double root.
  T radicand_band = T(1e-10);
};

namespace detail {

// Roots center +/- sqrt(radicand)/2 of one quadratic factor.
template <std::floating_point T>
void push_factor_roots(RootSet<T>& set, T center, T radicand, T band) {
  if (std::abs(radicand) <= band) {
    set.real_roots.push_back({center, 2});
    set.near_boundary = true;
  } else if (radicand > T(0)) {
    const T half = std::sqrt(radicand) / T(2);
    set.real_roots.push_back({center - half, 1});
    set.real_roots.push_back({center + half, 1});
  } else {
    set.complex_pairs.push_back({center, std::sqrt(-radicand) / T(2)});
  }
}

}  // namespace detail

/// Roots -a/4 - sqrt(Z)/2 +/- sqrt(R+)/2 and -a/4 + sqrt(Z)/2 +/- sqrt(R-)/2 where
/// R+/- = -A - Z +/- B/sqrt(Z). Requires Z > 0.
template <std::floating_point T>
RootSet<T> assemble_roots(T a, T A, T B, T Z, const AssembleTolerances<T>& tol = {}) {
  if (!(Z > T(0)) || !std::isfinite(Z)) throw domain_error("assemble_roots: Z must be positive");
  const T root_z = std::sqrt(Z);
  const T ratio = B / root_z;
  const T base = -A - Z;
  const T band = tol.radicand_band * (T(1) + std::abs(A) + Z);
  const T offset = -a / T(4);

  RootSet<T> set;
  set.degree = 4;
  detail::push_factor_roots(set, offset - root_z / T(2), base + ratio, band);
  detail::push_factor_roots(set, offset + root_z / T(2), base - ratio, band);
  detail::finalize(set);
  return set;
}

/// y^4 + p*y^2 + r = 0 solved as a quadratic in u = y^2, then x = y - shift.
template <std::floating_point T>
RootSet<T> solve_biquadratic(T p, T r, T shift, T tol = T(1e-10)) {
  if (!std::isfinite(p) || !std::isfinite(r) || !std::isfinite(shift)) {
    throw domain_error("solve_biquadratic: non-finite input");
  }
  RootSet<T> set;
  set.degree = 4;

  const T disc = p * p - T(4) * r;
  const T disc_band = tol * (T(1) + p * p + T(4) * std::abs(r));
  const T u_band = tol * (T(1) + std::abs(p) + std::sqrt(std::abs(r)));

  auto push_u = [&](T u, int mult) {
    if (std::abs(u) <= u_band) {
      set.real_roots.push_back({-shift, 2 * mult});
      set.near_boundary = true;
    } else if (u > T(0)) {
      const T y = std::sqrt(u);
      set.real_roots.push_back({-y - shift, mult});
      set.real_roots.push_back({y - shift, mult});
    } else {
      for (int k = 0; k < mult; ++k) set.complex_pairs.push_back({-shift, std::sqrt(-u)});
    }
  };

  if (std::abs(disc) <= disc_band) {
    set.near_boundary = true;
    push_u(-p / T(2), 2);
  } else if (disc > T(0)) {
    // u1 carries the larger magnitude; u2 = r/u1 avoids cancellation.
    const T s = std::sqrt(disc);
    const T u1 = -(p + std::copysign(s, p)) / T(2);
    const T u2 = r / u1;
    push_u(u1, 1);
    push_u(u2, 1);
  } else {
    // y^2 = (-p +/- i sqrt(-disc)) / 2: two conjugate pairs +/-(alpha +/- i beta).
    const std::complex<T> y = std::sqrt(std::complex<T>(-p / T(2), std::sqrt(-disc) / T(2)));
    const T alpha = std::abs(y.real());
    const T beta = std::abs(y.imag());
    set.complex_pairs.push_back({alpha - shift, beta});
    set.complex_pairs.push_back({-alpha - shift, beta});
  }
  detail::finalize(set);
  return set;
}

}  // namespace quartic
