#pragma once

// Coefficient containers, normalization to monic form, evaluation and
// scale-aware residuals for real polynomials of degree <= 4.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

namespace quartic {

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class zero_polynomial_error : public domain_error {
 public:
  zero_polynomial_error() : domain_error("identically zero polynomial") {}
};

namespace detail {

template <std::floating_point T, std::size_t N>
void require_finite(const std::array<T, N>& values, const char* what) {
  for (T v : values) {
    if (!std::isfinite(v)) {
      throw domain_error(std::string(what) + ": non-finite coefficient");
    }
  }
}

// Horner evaluation of c[0]*x^n + c[1]*x^(n-1) + ... + c[n].
template <typename T, typename X>
constexpr X horner(std::span<const T> descending, X x) {
  X acc{0};
  for (T c : descending) acc = acc * x + X(c);
  return acc;
}

// Same polynomial with an implicit leading 1.
template <typename T, typename X>
constexpr X horner_monic(std::span<const T> trailing, X x) {
  X acc{1};
  for (T c : trailing) acc = acc * x + X(c);
  return acc;
}

}  // namespace detail

/// e4*x^4 + e3*x^3 + e2*x^2 + e1*x + e0 as read from input. All fields finite.
template <std::floating_point T = double>
class RawCoefficients {
 public:
  RawCoefficients(T e4, T e3, T e2, T e1, T e0) : c_{e4, e3, e2, e1, e0} {
    detail::require_finite(c_, "RawCoefficients");
  }
  explicit RawCoefficients(const std::array<T, 5>& descending) : c_(descending) {
    detail::require_finite(c_, "RawCoefficients");
  }

  T e4() const { return c_[0]; }
  T e3() const { return c_[1]; }
  T e2() const { return c_[2]; }
  T e1() const { return c_[3]; }
  T e0() const { return c_[4]; }

  /// Coefficients from the x^4 term down to the constant.
  const std::array<T, 5>& descending() const { return c_; }

  RawCoefficients scaled(T t) const {
    return RawCoefficients(t * c_[0], t * c_[1], t * c_[2], t * c_[3], t * c_[4]);
  }

  bool operator==(const RawCoefficients&) const = default;

 private:
  std::array<T, 5> c_;
};

/// x^4 + a*x^3 + b*x^2 + c*x + d.
template <std::floating_point T = double>
class MonicQuartic {
 public:
  MonicQuartic(T a, T b, T c, T d) : c_{a, b, c, d} {
    detail::require_finite(c_, "MonicQuartic");
  }

  T a() const { return c_[0]; }
  T b() const { return c_[1]; }
  T c() const { return c_[2]; }
  T d() const { return c_[3]; }

  /// a, b, c, d (the implicit leading 1 excluded).
  std::span<const T> trailing() const { return c_; }

  bool operator==(const MonicQuartic&) const = default;

 private:
  std::array<T, 4> c_;
};

/// A problem whose leading coefficient was negligible: x^n + t[0] x^(n-1) + ... + t[n-1],
/// with degree n in 0..3. Degree 0 denotes a nonzero constant (no roots).
template <std::floating_point T = double>
struct LowerDegreeProblem {
  int degree = 0;
  std::array<T, 3> coeffs{};

  std::span<const T> trailing() const {
    return std::span<const T>(coeffs.data(), static_cast<std::size_t>(degree));
  }

  bool operator==(const LowerDegreeProblem&) const = default;
};

template <std::floating_point T>
using Normalized = std::variant<MonicQuartic<T>, LowerDegreeProblem<T>>;

inline constexpr double default_eps_lead = 1e-12;

/// Divides through by the leading coefficient. A leading coefficient with
/// |lead| <= eps_lead * max(|trailing|..., 1) is treated as zero and the
/// problem drops a degree, unless every trailing coefficient is exactly zero
/// (then lead*x^n = 0 is kept as is).
template <std::floating_point T>
Normalized<T> normalize(const RawCoefficients<T>& raw, T eps_lead = T(default_eps_lead)) {
  if (!(eps_lead >= T(0))) throw domain_error("normalize: eps_lead must be >= 0");
  const auto& c = raw.descending();
  if (std::all_of(c.begin(), c.end(), [](T v) { return v == T(0); })) {
    throw zero_polynomial_error();
  }

  std::size_t lead = 0;
  for (; lead < 4; ++lead) {
    T trailing_max = T(0);
    for (std::size_t k = lead + 1; k < 5; ++k) trailing_max = std::max(trailing_max, std::abs(c[k]));
    if (trailing_max == T(0)) break;
    if (std::abs(c[lead]) > eps_lead * std::max(trailing_max, T(1))) break;
  }

  const T inv = c[lead];
  if (lead == 0) return MonicQuartic<T>(c[1] / inv, c[2] / inv, c[3] / inv, c[4] / inv);

  LowerDegreeProblem<T> lower;
  lower.degree = static_cast<int>(4 - lead);
  for (std::size_t k = lead + 1, i = 0; k < 5; ++k, ++i) lower.coeffs[i] = c[k] / inv;
  return lower;
}

template <std::floating_point T, typename X>
X evaluate(const MonicQuartic<T>& m, X x) {
  return detail::horner_monic<T>(m.trailing(), x);
}

template <std::floating_point T, typename X>
X evaluate(const RawCoefficients<T>& raw, X x) {
  return detail::horner<T>(std::span<const T>(raw.descending()), x);
}

template <std::floating_point T, typename X>
X evaluate(const LowerDegreeProblem<T>& p, X x) {
  return detail::horner_monic<T>(p.trailing(), x);
}

/// |P(x)| / (1 + |x|^n) for a monic P of degree n.
template <std::floating_point T>
T scaled_residual(std::span<const T> monic_trailing, T x) {
  const T value = std::abs(detail::horner_monic<T>(monic_trailing, x));
  if (value == T(0)) return T(0);
  return value / (T(1) + std::pow(std::abs(x), static_cast<T>(monic_trailing.size())));
}

template <std::floating_point T>
T scaled_residual(std::span<const T> monic_trailing, std::complex<T> z) {
  const T value = std::abs(detail::horner_monic<T>(monic_trailing, z));
  if (value == T(0)) return T(0);
  return value / (T(1) + std::pow(std::abs(z), static_cast<T>(monic_trailing.size())));
}

/// |P(root)| / (1 + |root|^4).
template <std::floating_point T>
T residual(const MonicQuartic<T>& m, T root) {
  return scaled_residual<T>(m.trailing(), root);
}

}  // namespace quartic
