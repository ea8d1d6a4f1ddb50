#include "mixroots/families.hpp"

#include <cmath>
#include <numbers>

#include "mixroots/error.hpp"

namespace mixroots {

namespace {

// prod (z - alpha_i) over the given positions, ascending coefficients.
std::vector<Complex> monic_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const Complex a : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= a * c[k];
    }
    c = std::move(next);
  }
  return c;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

MixedPolynomial lens_numerator(const LensSystem& sys) {
  const std::size_t n = sys.masses.size();
  if (n == 0 || sys.positions.size() != n) {
    throw Error(ErrorKind::invalid_argument, "lens system needs equally many masses and positions");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.masses[i] == Complex{}) throw Error(ErrorKind::invalid_argument, "lens masses must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if (sys.positions[i] == sys.positions[j]) {
        throw Error(ErrorKind::invalid_argument, "lens positions must be distinct");
      }
    }
  }
  MixedPolynomial f = MixedPolynomial::zbar() * from_holomorphic(monic_from_roots(sys.positions));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(sys.positions[j]);
    }
    f = f - sys.masses[i] * from_holomorphic(monic_from_roots(others));
  }
  return f;
}

MixedPolynomial rhie3() {
  const MixedPolynomial q = from_holomorphic({-1.0 / 8.0, 0.0, 0.0, 1.0});
  const MixedPolynomial p = from_holomorphic({-13.0 / 100000.0, 0.0, 3.0 / 100.0});
  return Complex(3.0 / 100.0) * MixedPolynomial::zbar() * q - p;
}

MixedPolynomial rhie3_as_printed() {
  const MixedPolynomial q = from_holomorphic({-1.0 / 8.0, 0.0, 0.0, 1.0});
  const MixedPolynomial p = from_holomorphic({-12513.0 / 100000.0, 0.0, 3.0 / 100.0, 1.0});
  return Complex(3.0 / 100.0) * MixedPolynomial::zbar() * q - p;
}

MixedPolynomial power_lens(int n, int m) {
  if (m < 0 || n <= m) throw Error(ErrorKind::invalid_argument, "power_lens needs n > m >= 0");
  return MixedPolynomial::monomial(1.0, n, m) - MixedPolynomial::constant(1.0);
}

MixedPolynomial example_f() {
  const MixedPolynomial shift = Complex(1.0 / 100.0) * MixedPolynomial::zbar() + MixedPolynomial::constant(1.0);
  const MixedPolynomial q = from_holomorphic({-1.0 / 8.0, 0.0, 0.0, 1.0});
  const MixedPolynomial p = from_holomorphic({-12513.0 / 100000.0, 0.0, 3.0 / 100.0, 1.0});
  return power(shift, 3) * q - p;
}

MixedPolynomial rhie_family(int n, double epsilon, double a) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "rhie_family needs n >= 3");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw Error(ErrorKind::invalid_argument, "rhie_family needs 0 <= epsilon < 1");
  if (!(a > 0.0)) throw Error(ErrorKind::invalid_argument, "rhie_family needs a > 0");
  std::vector<Complex> polygon(n, 0.0);  // z^(n-1) - a^(n-1)
  polygon[0] = -std::pow(a, n - 1);
  polygon[n - 1] = 1.0;
  const MixedPolynomial ring = from_holomorphic(polygon);
  return MixedPolynomial::zbar() * MixedPolynomial::z() * ring -
         Complex(1.0 - epsilon) * MixedPolynomial::monomial(1.0, n - 1, 0) - Complex(epsilon) * ring;
}

LensSplit split_lens(const MixedPolynomial& base) {
  if (base.is_zero() || base.antiholomorphic_degree() != 1) {
    throw Error(ErrorKind::invalid_argument, "base must have the form zbar q(z) - p(z)");
  }
  LensSplit s;
  s.q = base.slice(1);
  s.p = base.slice(0);
  for (auto& c : s.p) c = -c;
  if (static_cast<int>(s.q.size()) - 1 != base.holomorphic_degree()) {
    throw Error(ErrorKind::invalid_argument, "base must satisfy deg p <= deg q");
  }
  s.gamma = s.q.back();
  if (s.gamma == Complex{}) throw Error(ErrorKind::invalid_argument, "gamma must be non-zero");
  return s;
}

MixedPolynomial phi_t(const BifurcationSpec& spec) {
  if (spec.m < 1) throw Error(ErrorKind::invalid_argument, "phi_t needs m >= 1");
  const LensSplit s = split_lens(spec.base);
  if (spec.t == Complex{} || spec.m == 1) return spec.base;

  // ((t zbar + gamma)^m - gamma^m) / (gamma^(m-1) m t)
  //   = sum_{k=1}^{m} C(m,k)/m (t/gamma)^(k-1) zbar^k
  const Complex ratio = spec.t / s.gamma;
  std::vector<Complex> prefactor(spec.m + 1);
  Complex ratio_power = 1.0;
  for (int k = 1; k <= spec.m; ++k) {
    prefactor[k] = binomial(spec.m, k) / spec.m * ratio_power;
    ratio_power *= ratio;
  }
  return from_antiholomorphic(prefactor) * from_holomorphic(s.q) - from_holomorphic(s.p);
}

MixedPolynomial psi_t(const BifurcationSpec& spec) {
  if (spec.m < 2) throw Error(ErrorKind::invalid_argument, "psi_t needs m >= 2");
  const LensSplit s = split_lens(spec.base);
  return MixedPolynomial::monomial(spec.t, 0, spec.m) * from_holomorphic(s.q) + spec.base;
}

MixedPolynomial bifurcate(const BifurcationSpec& spec) {
  return spec.variant == BifurcationVariant::phi ? phi_t(spec) : psi_t(spec);
}

std::vector<Complex> predict_infinity_roots(Complex gamma, int m, Complex t) {
  if (m < 2) throw Error(ErrorKind::invalid_argument, "predict_infinity_roots needs m >= 2");
  if (t == Complex{} || gamma == Complex{}) {
    throw Error(ErrorKind::invalid_argument, "predict_infinity_roots needs t != 0 and gamma != 0");
  }
  std::vector<Complex> z;
  for (int j = 1; j < m; ++j) {
    const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
    z.push_back(std::conj(gamma * (zeta - 1.0) / t));
  }
  return z;
}

}  // namespace mixroots
