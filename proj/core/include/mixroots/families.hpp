#pragma once

#include <vector>

#include "mixroots/mixed_polynomial.hpp"

namespace mixroots {

/// Point masses of the lens equation zbar = sum sigma_i / (z - alpha_i).
struct LensSystem {
  std::vector<Complex> masses;
  std::vector<Complex> positions;
};

/// zbar prod(z - alpha_i) - sum sigma_i prod_{j != i}(z - alpha_j), in M(n+1; n, 1).
MixedPolynomial lens_numerator(const LensSystem& sys);

/// (3/100) zbar (z^3 - 1/8) - 3 z^2 / 100 + 13/100000: a three-mass lens
/// polynomial with ten simple roots, the maximum 5n - 5 for n = 3.
/// example_f() is exactly phi_t of it with m = 3, t = 3/10000.
MixedPolynomial rhie3();

/// Variant with p(z) = z^3 + 3 z^2/100 - 12513/100000. It has only four
/// roots; kept as a regression reference.
MixedPolynomial rhie3_as_printed();

/// zbar^m z^n - 1; requires n > m >= 0.
MixedPolynomial power_lens(int n, int m);

/// (zbar/100 + 1)^3 (z^3 - 1/8) - z^3 - 3 z^2/100 + 12513/100000.
MixedPolynomial example_f();

/// Numerator of zbar = (1 - eps) z^(n-2) / (z^(n-1) - a^(n-1)) + eps / z.
/// Requires n >= 3, 0 <= eps < 1, a > 0. No claim on its root count.
MixedPolynomial rhie_family(int n, double epsilon, double a);

/// Split of a lens polynomial zbar q(z) - p(z) into q and p (ascending).
struct LensSplit {
  std::vector<Complex> q;
  std::vector<Complex> p;
  /// Leading coefficient of q.
  Complex gamma;
};

/// Throws Error(invalid_argument) unless `base` has the form zbar q(z) - p(z)
/// with deg p <= deg q = deg_z base and a nonzero leading coefficient of q.
LensSplit split_lens(const MixedPolynomial& base);

enum class BifurcationVariant { phi, psi };

struct BifurcationSpec {
  MixedPolynomial base;
  int m = 1;
  Complex t{};
  BifurcationVariant variant = BifurcationVariant::phi;
};

/// ((t zbar + gamma)^m - gamma^m) / (gamma^(m-1) m t) q(z) - p(z), expanded
/// through the binomial theorem so no division by t occurs. t = 0 gives base.
MixedPolynomial phi_t(const BifurcationSpec& spec);

/// t zbar^m q(z) + base = (t zbar^m + zbar) q(z) - p(z), a harmonically
/// splitting lens polynomial; requires m >= 2.
MixedPolynomial psi_t(const BifurcationSpec& spec);

/// Either constructor, chosen by spec.variant.
MixedPolynomial bifurcate(const BifurcationSpec& spec);

/// Leading-order locations of the m - 1 roots of phi_t born at infinity:
/// zbar = gamma (zeta - 1) / t for the nontrivial m-th roots of unity zeta.
std::vector<Complex> predict_infinity_roots(Complex gamma, int m, Complex t);

}  // namespace mixroots
