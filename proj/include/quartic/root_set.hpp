#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <string_view>
#include <tuple>
#include <vector>

namespace quartic {

enum class Classification { FourReal, TwoRealOneComplexPair, TwoComplexPairs, Degenerate };

/// Why a problem is degenerate. Only meaningful with Classification::Degenerate.
enum class DegenerateKind { None, Cubic, Quadratic, Linear, Constant };

constexpr std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::FourReal: return "FourReal";
    case Classification::TwoRealOneComplexPair: return "TwoRealOneComplexPair";
    case Classification::TwoComplexPairs: return "TwoComplexPairs";
    case Classification::Degenerate: return "Degenerate";
  }
  return "?";
}

constexpr std::string_view to_string(DegenerateKind k) {
  switch (k) {
    case DegenerateKind::None: return "None";
    case DegenerateKind::Cubic: return "Cubic";
    case DegenerateKind::Quadratic: return "Quadratic";
    case DegenerateKind::Linear: return "Linear";
    case DegenerateKind::Constant: return "Constant";
  }
  return "?";
}

template <std::floating_point T = double>
struct RealRoot {
  T value;
  int multiplicity = 1;
  bool operator==(const RealRoot&) const = default;
};

/// re +/- im*i with im > 0.
template <std::floating_point T = double>
struct ComplexPair {
  T re;
  T im;
  bool operator==(const ComplexPair&) const = default;
};

template <std::floating_point T = double>
struct RootSet {
  Classification classification = Classification::Degenerate;
  DegenerateKind degenerate = DegenerateKind::None;
  int degree = 4;
  std::vector<RealRoot<T>> real_roots;     // ascending
  std::vector<ComplexPair<T>> complex_pairs;
  // Set when a discriminant-like quantity fell inside its zero band.
  bool near_boundary = false;

  int real_count() const {
    int n = 0;
    for (const auto& r : real_roots) n += r.multiplicity;
    return n;
  }

  /// Real roots repeated by multiplicity, ascending.
  std::vector<T> expanded_real() const {
    std::vector<T> out;
    for (const auto& r : real_roots)
      for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
  }

  /// Checks the structural invariants: multiplicities sum to the degree,
  /// real roots strictly ascending, every stored imaginary part positive.
  bool well_formed() const {
    if (real_count() + 2 * static_cast<int>(complex_pairs.size()) != degree) return false;
    for (std::size_t i = 0; i < real_roots.size(); ++i) {
      if (real_roots[i].multiplicity < 1 || !std::isfinite(real_roots[i].value)) return false;
      if (i > 0 && !(real_roots[i - 1].value < real_roots[i].value)) return false;
    }
    return std::all_of(complex_pairs.begin(), complex_pairs.end(), [](const auto& p) {
      return p.im > T(0) && std::isfinite(p.re) && std::isfinite(p.im);
    });
  }
};

namespace detail {

// Sorts the real roots, fuses equal values (within a few ulps) into one
// entry with summed multiplicity, sorts pairs, and assigns a classification.
template <std::floating_point T>
void finalize(RootSet<T>& set) {
  auto& reals = set.real_roots;
  std::sort(reals.begin(), reals.end(),
            [](const RealRoot<T>& x, const RealRoot<T>& y) { return x.value < y.value; });
  std::vector<RealRoot<T>> fused;
  constexpr T ulp_tol = 4 * std::numeric_limits<T>::epsilon();
  for (const auto& r : reals) {
    if (!fused.empty() &&
        std::abs(fused.back().value - r.value) <= ulp_tol * std::max(T(1), std::abs(r.value))) {
      auto& last = fused.back();
      const int m = last.multiplicity + r.multiplicity;
      last.value = (last.value * T(last.multiplicity) + r.value * T(r.multiplicity)) / T(m);
      last.multiplicity = m;
    } else {
      fused.push_back(r);
    }
  }
  reals = std::move(fused);

  std::sort(set.complex_pairs.begin(), set.complex_pairs.end(),
            [](const ComplexPair<T>& x, const ComplexPair<T>& y) {
              return std::tie(x.re, x.im) < std::tie(y.re, y.im);
            });

  if (set.degenerate != DegenerateKind::None || set.degree != 4) {
    set.classification = Classification::Degenerate;
    return;
  }
  switch (set.real_count()) {
    case 4: set.classification = Classification::FourReal; break;
    case 2: set.classification = Classification::TwoRealOneComplexPair; break;
    case 0: set.classification = Classification::TwoComplexPairs; break;
    default: set.classification = Classification::Degenerate; break;
  }
}

}  // namespace detail

}  // namespace quartic
