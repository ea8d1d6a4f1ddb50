#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mixroots/classify.hpp"
#include "mixroots/error.hpp"
#include "mixroots/families.hpp"
#include "oracles.hpp"

using namespace mixroots;

namespace {

const MixedPolynomial Z = MixedPolynomial::z();
const MixedPolynomial W = MixedPolynomial::zbar();
MixedPolynomial C(Complex c) { return MixedPolynomial::constant(c); }

double coefficient_distance(const MixedPolynomial& a, const MixedPolynomial& b) {
  double d = 0.0;
  for (const auto& [e, c] : a.terms()) d = std::max(d, std::abs(c - b.coefficient(e.zn, e.zb)));
  for (const auto& [e, c] : b.terms()) d = std::max(d, std::abs(c - a.coefficient(e.zn, e.zb)));
  return d;
}

const Root& nearest(const std::vector<Root>& roots, Complex z) {
  return *std::min_element(roots.begin(), roots.end(), [z](const Root& a, const Root& b) {
    return std::abs(a.location - z) < std::abs(b.location - z);
  });
}

}  // namespace

TEST(LensNumerator, TwoEqualMasses) {
  const MixedPolynomial f = lens_numerator({{1.0, 1.0}, {1.0, -1.0}});
  EXPECT_LT(coefficient_distance(f, W * (Z * Z - C(1.0)) - C(2.0) * Z), 1e-15);
}

TEST(LensNumerator, SingleMassIsNonIsolated) {
  const MixedPolynomial f = lens_numerator({{1.0}, {0.0}});
  EXPECT_LT(coefficient_distance(f, Z * W - C(1.0)), 1e-15);
  try {
    solve_all(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_isolated);
  }
}

TEST(LensNumerator, Errors) {
  EXPECT_THROW(lens_numerator({{1.0, 1.0}, {0.5, 0.5}}), Error);
  EXPECT_THROW(lens_numerator({{1.0, 0.0}, {0.5, 0.0}}), Error);
  EXPECT_THROW(lens_numerator({{1.0}, {0.5, 1.0}}), Error);
}

TEST(Rhie3, DegreesAndCounts) {
  const DegreeProfile p = degrees(rhie3());
  EXPECT_EQ(p.holo, 3);
  EXPECT_EQ(p.antiholo, 1);
  EXPECT_EQ(p.mixed, 4);
  const RootReport r = solve_all(rhie3());
  EXPECT_EQ(r.rho, 10);
  EXPECT_EQ(r.beta, 2);
}

TEST(Rhie3, AsPrintedVariantHasFourRoots) {
  const RootReport r = solve_all(rhie3_as_printed());
  EXPECT_EQ(r.rho, 4);
  EXPECT_EQ(r.beta, 2);
}

TEST(PowerLens, Examples) {
  const RootReport a = solve_all(power_lens(3, 1));
  ASSERT_EQ(a.rho, 2);
  EXPECT_LT(std::abs(a.roots[0].location + 1.0), 1e-12);
  EXPECT_LT(std::abs(a.roots[1].location - 1.0), 1e-12);
  EXPECT_EQ(power_lens(2, 0), Z * Z - C(1.0));
  const RootReport c = solve_all(power_lens(5, 2));
  EXPECT_EQ(c.rho, 3);
  EXPECT_EQ(c.beta, 3);
}

TEST(PowerLens, RejectsNotAboveM) {
  EXPECT_THROW(power_lens(2, 2), Error);
  EXPECT_THROW(power_lens(1, 3), Error);
  EXPECT_THROW(power_lens(2, -1), Error);
}

TEST(ExampleF, MatchesPhiOfRhie3) {
  // gamma = 3/100 and gamma/t = 100.
  const MixedPolynomial phi = phi_t({rhie3(), 3, 3e-4, BifurcationVariant::phi});
  EXPECT_LT(coefficient_distance(example_f(), phi), 1e-15);
}

TEST(ExampleF, Profile) {
  const DegreeProfile p = degrees(example_f());
  EXPECT_EQ(p.holo, 3);
  EXPECT_EQ(p.antiholo, 3);
  EXPECT_EQ(p.mixed, 6);
  EXPECT_TRUE(p.top_is_monomial);
  EXPECT_NEAR(std::abs(p.top_coefficient - 1e-6), 0.0, 1e-21);
}

TEST(ExampleF, LargeRootsAndCounts) {
  const RootReport r = solve_all(example_f());
  EXPECT_EQ(r.rho, 12);
  EXPECT_EQ(r.beta, 0);
  for (const Complex w : {Complex(-150.0, 86.6), Complex(-150.0, -86.6)}) {
    const Root& x = nearest(r.roots, w);
    EXPECT_LT(std::abs(x.location - w), 0.5);
    EXPECT_EQ(x.sign, RootSign::negative);
  }
}

TEST(SplitLens, RecoversQPAndGamma) {
  const LensSplit s = split_lens(rhie3());
  EXPECT_NEAR(std::abs(s.gamma - 0.03), 0.0, 1e-17);
  ASSERT_EQ(s.q.size(), 4u);
  EXPECT_NEAR(std::abs(s.q[0] + 0.03 / 8.0), 0.0, 1e-17);
  EXPECT_THROW(split_lens(example_f()), Error);
}

TEST(PhiT, MEqualsOneIsBase) {
  for (const Complex t : {Complex(0.1), Complex(1e-3, 2e-3), Complex(5.0)}) {
    EXPECT_LT(coefficient_distance(phi_t({rhie3(), 1, t, BifurcationVariant::phi}), rhie3()), 1e-16);
  }
}

TEST(PhiT, ZeroTIsBase) { EXPECT_EQ(phi_t({rhie3(), 3, 0.0, BifurcationVariant::phi}), rhie3()); }

TEST(PhiT, MatchesBinomialExpansion) {
  // ((t w + g)^m - g^m) / (g^(m-1) m t) = sum_k C(m,k)/m (t/g)^(k-1) w^k.
  const LensSplit s = split_lens(rhie3());
  const Complex t(2e-3, -1e-3);
  const int m = 4;
  MixedPolynomial r;
  for (int k = 1; k <= m; ++k) {
    r = r + MixedPolynomial::monomial(oracle::binomial(m, k) / m * std::pow(t / s.gamma, k - 1), 0, k);
  }
  const MixedPolynomial expect = r * from_holomorphic(s.q) - from_holomorphic(s.p);
  EXPECT_LT(coefficient_distance(phi_t({rhie3(), m, t, BifurcationVariant::phi}), expect), 1e-16);
}

TEST(PhiT, CoefficientsConvergeLinearlyInT) {
  double previous = 0.0;
  for (int k = 2; k <= 4; ++k) {
    const double t = std::pow(10.0, -k);
    const double d = coefficient_distance(phi_t({rhie3(), 3, t, BifurcationVariant::phi}), rhie3());
    if (k > 2) EXPECT_NEAR(previous / d, 10.0, 0.5);
    previous = d;
  }
}

TEST(PhiT, Errors) {
  EXPECT_THROW(phi_t({example_f(), 2, 0.1, BifurcationVariant::phi}), Error);
  EXPECT_THROW(phi_t({Z * Z - W * Z, 2, 0.1, BifurcationVariant::phi}), Error);  // deg p > deg q
  EXPECT_THROW(phi_t({rhie3(), 0, 0.1, BifurcationVariant::phi}), Error);
}

TEST(PsiT, ZeroTAndForm) {
  EXPECT_EQ(psi_t({rhie3(), 2, 0.0, BifurcationVariant::psi}), rhie3());
  const LensSplit s = split_lens(rhie3());
  const Complex t = 1e-3;
  const MixedPolynomial expect = C(t) * W * W * from_holomorphic(s.q) + rhie3();
  EXPECT_LT(coefficient_distance(psi_t({rhie3(), 2, t, BifurcationVariant::psi}), expect), 1e-18);
  EXPECT_THROW(psi_t({rhie3(), 1, t, BifurcationVariant::psi}), Error);
}

TEST(PsiT, NewRootsAreNegative) {
  const RootReport base = solve_all(rhie3());
  const RootReport r = solve_all(psi_t({rhie3(), 2, 1e-3, BifurcationVariant::psi}));
  ASSERT_EQ(r.rho, 11);
  int new_negative = 0;
  for (const Root& x : r.roots) {
    const Root& b = nearest(base.roots, x.location);
    if (std::abs(b.location - x.location) > 0.05) {
      EXPECT_EQ(x.sign, RootSign::negative);
      ++new_negative;
    }
  }
  EXPECT_EQ(new_negative, 1);
}

TEST(PredictInfinityRoots, ClosedForm) {
  const Complex gamma(0.03, 0.01);
  const Complex t(2e-5, 1e-5);
  for (int m = 2; m <= 5; ++m) {
    const auto got = predict_infinity_roots(gamma, m, t);
    const auto expect = oracle::infinity_roots(gamma, m, t);
    ASSERT_EQ(got.size(), expect.size());
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_LT(std::abs(got[k] - expect[k]), 1e-9 * std::abs(expect[k]));
  }
  const auto two = predict_infinity_roots(gamma, 2, t);
  EXPECT_LT(std::abs(two[0] - std::conj(-2.0 * gamma / t)), 1e-9 * std::abs(two[0]));
}

TEST(PredictInfinityRoots, WorkedExampleValues) {
  const auto p = predict_infinity_roots(1.0, 3, 0.01);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0].real(), -150.0, 1e-9);
  EXPECT_NEAR(std::abs(p[0].imag()), 86.6, 0.01);
  EXPECT_LT(std::abs(p[1] - std::conj(p[0])), 1e-9);
}

TEST(PredictInfinityRoots, Errors) {
  EXPECT_THROW(predict_infinity_roots(1.0, 1, 0.1), Error);
  EXPECT_THROW(predict_infinity_roots(1.0, 3, 0.0), Error);
  EXPECT_THROW(predict_infinity_roots(0.0, 3, 0.1), Error);
}

TEST(PredictInfinityRoots, NewtonFromPredictionFindsNegativeRoot) {
  const Complex gamma = split_lens(rhie3()).gamma;
  const Complex t = 1e-3 * std::abs(gamma);
  for (int m = 2; m <= 4; ++m) {
    const MixedPolynomial phi = phi_t({rhie3(), m, t, BifurcationVariant::phi});
    for (const Complex z : predict_infinity_roots(gamma, m, t)) {
      const Root r = newton_polish(phi, z);
      EXPECT_EQ(r.sign, RootSign::negative);
      EXPECT_LT(std::abs(r.location - z), 0.1 * std::abs(z));
    }
  }
}

TEST(Bifurcation, RootsNearBaseKeepTheirSigns) {
  const RootReport base = solve_all(rhie3());
  const Complex t = 1e-3 * std::abs(split_lens(rhie3()).gamma);
  for (int m : {2, 3}) {
    const RootReport r = solve_all(phi_t({rhie3(), m, t, BifurcationVariant::phi}));
    ASSERT_EQ(r.rho, 9 + m);
    int near = 0;
    for (const Root& b : base.roots) {
      const Root& x = nearest(r.roots, b.location);
      if (std::abs(x.location - b.location) <= 0.05) {
        ++near;
        EXPECT_EQ(x.sign, b.sign);
      }
    }
    EXPECT_EQ(near, 10);
    int far = 0;
    for (const Root& x : r.roots) {
      if (std::abs(x.location) > 100.0) {
        ++far;
        EXPECT_EQ(x.sign, RootSign::negative);
      }
    }
    EXPECT_EQ(far, m - 1);
  }
}

TEST(Bifurcation, AbsoluteTOfOneThousandthIsNotYetSmall) {
  // t = 1e-3 is |gamma| / 30: base roots drift by more than 0.05 and the
  // new roots sit near modulus 50 to 60.
  const RootReport base = solve_all(rhie3());
  const RootReport r = solve_all(phi_t({rhie3(), 3, 1e-3, BifurcationVariant::phi}));
  EXPECT_EQ(r.rho, 12);
  int near = 0;
  for (const Root& b : base.roots) near += std::abs(nearest(r.roots, b.location).location - b.location) <= 0.05;
  EXPECT_LT(near, 10);
  const double largest = std::abs(std::max_element(r.roots.begin(), r.roots.end(), [](const Root& a, const Root& b) {
                                    return std::abs(a.location) < std::abs(b.location);
                                  })->location);
  EXPECT_LT(largest, 100.0);
}

TEST(Bifurcation, CountIdentityAcrossT) {
  for (int m : {2, 3, 4}) {
    for (const double t : {1e-3, 3e-4, 1e-4, 3e-5}) {
      const RootReport r = solve_all(phi_t({rhie3(), m, t, BifurcationVariant::phi}));
      EXPECT_EQ(r.rho, 10 + m - 1) << "m=" << m << " t=" << t;
    }
  }
}

TEST(RhieFamily, EpsilonZeroIsPolygonLensTimesZ) {
  const int n = 4;
  const double a = 0.8;
  // zbar = z^(n-2) / (z^(n-1) - a^(n-1)) has numerator zbar (z^(n-1) - a^(n-1)) - z^(n-2); times z.
  const MixedPolynomial zn1 = power(Z, n - 1) - C(std::pow(a, n - 1));
  const MixedPolynomial expect = Z * (W * zn1 - power(Z, n - 2));
  EXPECT_LT(coefficient_distance(rhie_family(n, 0.0, a), expect), 1e-15);
}

TEST(RhieFamily, ClassifiesAsLens) {
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(classify_polynomial(rhie_family(n, 0.05, 0.7)), (ClassTag{PolynomialClass::L, n, 1}));
  }
}

int best_rho(int n, const std::vector<double>& eps, const std::vector<double>& a) {
  int best = 0;
  for (double e : eps) {
    for (double x : a) {
      const RootReport r = solve_all(rhie_family(n, e, x));
      EXPECT_LE(r.rho, 5 * n - 5);
      if (!r.degenerate_found) best = std::max(best, r.rho);
    }
  }
  return best;
}

TEST(RhieFamily, PolygonWithCentreReachesFiveNMinusFive) {
  const std::vector<double> eps = {1e-3, 3e-3, 1e-2};
  const std::vector<double> a = {0.55, 0.6, 0.65, 0.7, 0.75};
  EXPECT_EQ(best_rho(4, eps, a), 15);
  EXPECT_EQ(best_rho(5, eps, a), 20);
}

TEST(RhieFamily, TwoGonWithCentreStopsAtSix) {
  // Two masses at +-a and one at 0 never give ten roots on (0, 0.1] x (0.5, 1];
  // solve_all and the grid oracle agree on every point.
  std::vector<double> eps;
  std::vector<double> a;
  for (int k = 1; k <= 10; ++k) eps.push_back(0.01 * k);
  for (int k = 1; k <= 10; ++k) a.push_back(0.5 + 0.05 * k);
  EXPECT_EQ(best_rho(3, eps, a), 6);
  const MixedPolynomial f = rhie_family(3, 0.05, 0.75);
  const double R = 2.0 * root_radius_bound(f);
  EXPECT_EQ(grid_newton_oracle(f, {-R, R, -R, R}, 200).size(), 6u);
}

TEST(RhieFamily, Errors) {
  EXPECT_THROW(rhie_family(2, 0.1, 1.0), Error);
  EXPECT_THROW(rhie_family(3, 1.0, 1.0), Error);
  EXPECT_THROW(rhie_family(3, -0.1, 1.0), Error);
  EXPECT_THROW(rhie_family(3, 0.1, 0.0), Error);
}
