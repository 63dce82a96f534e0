#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <quartic.hpp>

#include "support/test_oracles.hpp"

using namespace quartic;

namespace {

double ulp_of(double x) {
  const double ax = std::abs(x);
  return std::nextafter(ax, INFINITY) - ax;
}

std::array<double, 4> coeffs(const MonicQuartic<double>& m) { return {m.a(), m.b(), m.c(), m.d()}; }

}  // namespace

TEST(QuarticProperties, DepressionRoundTrip) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100000; ++trial) {
    const auto m = gen::uniform_coefficients<double>(rng);
    const auto dep = depress(m);
    const double s = dep.shift, p = dep.p, q = dep.q, r = dep.r;
    const double s2 = s * s;
    // (y + s)^4 + p (y + s)^2 + q (y + s) + r expanded back.
    const std::array<double, 4> back{4 * s, 6 * s2 + p, 4 * s2 * s + 2 * p * s + q, s2 * s2 + p * s2 + q * s + r};
    const std::array<double, 4> mag{std::abs(4 * s), 6 * s2 + std::abs(p),
                                    4 * s2 * std::abs(s) + 2 * std::abs(p * s) + std::abs(q),
                                    s2 * s2 + std::abs(p) * s2 + std::abs(q * s) + std::abs(r)};
    const auto orig = coeffs(m);
    for (int k = 0; k < 4; ++k) {
      ASSERT_LE(std::abs(back[k] - orig[k]), 1e-12 * std::max(1.0, mag[k])) << "trial " << trial << " k " << k;
    }
  }
}

TEST(QuarticProperties, ShiftedCoefficientsAreTwiceDepressed) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 100000; ++trial) {
    const auto m = gen::uniform_coefficients<double>(rng);
    const auto dep = depress(m);
    const auto sc = shifted_coeffs(m);
    ASSERT_LE(std::abs(sc.A - 2 * dep.p), 2 * ulp_of(2 * dep.p)) << "trial " << trial;
    ASSERT_LE(std::abs(sc.B - 2 * dep.q), 2 * ulp_of(2 * dep.q)) << "trial " << trial;
  }
}

TEST(QuarticProperties, DeltaInvariantsMatchCardanoQR) {
  // Normalized resolvent z^3 + p z^2 + (p^2/4 - r) z - q^2/8 has
  // Q = (3(p^2/4 - r) - p^2)/9 and R = (9p(p^2/4 - r) + 27 q^2/8 - 2p^3)/54.
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto m = gen::uniform_coefficients<double>(rng);
    const auto exact = quartic_test::depress_exact(m.a(), m.b(), m.c(), m.d());
    const auto [d0, d1] = quartic_test::deltas_exact(m.a(), m.b(), m.c(), m.d());
    const auto& p = exact.p;
    const auto& q = exact.q;
    const auto& r = exact.r;
    const quartic_test::Rational beta = p * p / 4 - r;
    const quartic_test::Rational Q = (3 * beta - p * p) / 9;
    const quartic_test::Rational R = (9 * p * beta + 27 * q * q / 8 - 2 * p * p * p) / 54;
    ASSERT_EQ(d0, -36 * Q) << "trial " << trial;
    ASSERT_EQ(d1, 432 * R) << "trial " << trial;

    // The floating-point invariants track the exact ones to 1e-10 of the term magnitude.
    const auto inv = delta_invariants(m);
    const double a = std::abs(m.a()), b = std::abs(m.b()), c = std::abs(m.c()), d = std::abs(m.d());
    const double mag0 = b * b + 12 * d + 3 * a * c;
    const double mag1 = 27 * a * a * d + 9 * a * b * c + 2 * b * b * b + 72 * b * d + 27 * c * c;
    EXPECT_LE(std::abs(inv.delta0 - d0.convert_to<double>()), 1e-10 * mag0);
    EXPECT_LE(std::abs(inv.delta1 - d1.convert_to<double>()), 1e-10 * mag1);
  }
}

TEST(QuarticProperties, ResolventResidualBounded) {
  std::mt19937_64 rng(104);
  int by_branch[3] = {0, 0, 0};
  for (int trial = 0; trial < 100000; ++trial) {
    const auto m = trial % 2 ? gen::uniform_coefficients<double>(rng) : gen::real_rooted<double>(rng).poly;
    const auto dep = depress(m);
    const auto inv = delta_invariants(m);
    const auto res = resolvent_z(dep.p, inv.delta0, inv.delta1);
    ++by_branch[static_cast<int>(res.branch)];
    const double z = res.Z / 2;
    const double value = std::abs(resolvent_value(dep.p, dep.q, dep.r, z));
    const double bound =
        1e-8 * std::max({1.0, dep.q * dep.q, std::abs(dep.p * dep.p * dep.p)});
    ASSERT_LE(value, bound) << "trial " << trial;
  }
  EXPECT_GT(by_branch[0], 0);
  EXPECT_GT(by_branch[1], 0);
}

TEST(QuarticProperties, TrigBranchHasPositiveDelta0) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto m = gen::uniform_coefficients<double>(rng);
    const auto inv = delta_invariants(m);
    const auto res = resolvent_z(depress(m).p, inv.delta0, inv.delta1);
    if (res.branch == ResolventBranch::Trig) {
      ASSERT_GT(inv.delta0, 0.0);
      ASSERT_TRUE(res.phi.has_value());
      ASSERT_GE(*res.phi, 0.0);
      ASSERT_LE(*res.phi, 3.14159265358979324);
    }
  }
}

TEST(QuarticProperties, ConstructedRootsRecovered) {
  std::mt19937_64 rng(106);
  int excluded = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto inst = gen::real_rooted<double>(rng);
    const auto report = solve_quartic(inst.poly);
    ASSERT_EQ(report.roots.classification, Classification::FourReal) << "trial " << trial;
    if (quartic_test::near_multiple(inst.roots)) {
      ++excluded;
      continue;
    }
    const auto got = report.roots.expanded_real();
    ASSERT_EQ(got.size(), 4u);
    const double scale = 1 + std::max(std::abs(inst.roots[0]), std::abs(inst.roots[3]));
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], inst.roots[k], 1e-8 * scale) << "trial " << trial;
  }
  EXPECT_LT(excluded, 20);
}

TEST(QuarticProperties, VietaIdentities) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto inst = gen::real_rooted<double>(rng);
    const auto report = solve_quartic(inst.poly);
    ASSERT_EQ(report.roots.classification, Classification::FourReal);
    const auto got = report.roots.expanded_real();
    const auto e = quartic_test::elementary_symmetric({got[0], got[1], got[2], got[3]});
    const auto c = coeffs(inst.poly);
    const double sign[4] = {-1, 1, -1, 1};
    // Each e_k is compared at the magnitude of its terms (largest root to the k-th power).
    const double big = 1 + std::max(std::abs(got[0]), std::abs(got[3]));
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(sign[k] * e[k], c[k], 1e-7 * std::pow(big, k + 1)) << "trial " << trial << " k " << k;
    }
  }
}

TEST(QuarticProperties, RealCountMatchesOracle) {
  std::mt19937_64 rng(108);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto m = gen::uniform_coefficients<double>(rng);
    const auto inv = delta_invariants(m);
    const double disc = inv.delta1 * inv.delta1 - 4 * inv.delta0 * inv.delta0 * inv.delta0;
    const double scale = std::max(inv.delta1 * inv.delta1, 4 * std::abs(inv.delta0 * inv.delta0 * inv.delta0));
    if (std::abs(disc) < 1e-6 * scale) continue;
    ++checked;
    const auto report = solve_quartic(m);
    const auto oracle_roots = oracle::oracle_real_roots(m);
    int oracle_count = 0;
    for (const auto& r : oracle_roots) oracle_count += r.multiplicity;
    ASSERT_EQ(report.roots.real_count(), oracle_count) << "trial " << trial;
  }
  EXPECT_GT(checked, 19000);
}

TEST(QuarticProperties, ExplicitFormulasMatchStagedPipeline) {
  std::mt19937_64 rng(109);
  SolveOptions<double> raw_opts;
  raw_opts.polish = false;
  int checked = 0;
  while (checked < 2000) {
    const auto inst = gen::real_rooted<double>(rng);
    const auto dep = depress(inst.poly);
    if (std::abs(dep.q) <= 1e-6 || quartic_test::near_multiple(inst.roots)) continue;
    const auto staged = solve_quartic(inst.poly, raw_opts);
    if (staged.branch != Branch::Trig) continue;
    ++checked;
    auto lambda = explicit_roots_monolithic(inst.poly);
    std::sort(lambda.begin(), lambda.end());
    const auto got = staged.roots.expanded_real();
    ASSERT_EQ(got.size(), 4u);
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(lambda[k], got[k], 1e-10 * std::max(1.0, std::abs(got[k]))) << "trial " << checked;
    }
  }
}

TEST(QuarticProperties, ShiftEquivariance) {
  // Roots on a 1/64 grid in [-5, 5] and integer shifts keep every coefficient
  // of P and of P(x - s) exactly representable, so both problems are exact and
  // any difference comes from the solver.
  std::mt19937_64 rng(110);
  std::uniform_int_distribution<int> grid(-320, 320);
  std::uniform_int_distribution<int> shift(-10, 10);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::array<double, 4> roots{};
    for (auto& r : roots) r = grid(rng) / 64.0;
    std::sort(roots.begin(), roots.end());
    const double s = shift(rng);
    std::array<double, 4> moved = roots;
    for (auto& r : moved) r += s;
    // Repeated roots are only accurate to the square root of the rounding error.
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;
    ++checked;
    const auto base = solve_quartic(gen::from_roots(roots)).roots.expanded_real();
    const auto other = solve_quartic(gen::from_roots(moved)).roots.expanded_real();
    ASSERT_EQ(base.size(), other.size()) << "trial " << trial;
    for (std::size_t k = 0; k < base.size(); ++k) EXPECT_NEAR(other[k], base[k] + s, 1e-8) << "trial " << trial;
  }
  EXPECT_GT(checked, 15000);
}

TEST(QuarticProperties, RootSetsAreWellFormed) {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 20000; ++trial) {
    MonicQuartic<double> m = gen::uniform_coefficients<double>(rng);
    if (trial % 3 == 1) m = gen::real_rooted<double>(rng).poly;
    if (trial % 3 == 2) m = gen::biquadratic<double>(rng);
    const auto report = solve_quartic(m);
    ASSERT_TRUE(report.roots.well_formed()) << "trial " << trial;
    ASSERT_EQ(report.residuals.size(), report.roots.real_roots.size());
  }
}
