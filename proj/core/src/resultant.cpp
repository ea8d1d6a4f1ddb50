#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "mixroots/error.hpp"
#include "mixroots/solver.hpp"

namespace mixroots {

namespace {

using LComplex = std::complex<long double>;
using LMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;

// Coefficients, in w, of both polynomials at z; formal degrees are kept even
// when a leading coefficient vanishes at this particular z.
struct SylvesterSample {
  LComplex det;
  long double hadamard;  // product of row norms, bounds |det|
};

SylvesterSample sylvester_sample(const BivariatePolynomial& F, const BivariatePolynomial& G, LComplex z) {
  const int m = F.degree_w();
  const int n = G.degree_w();
  const int size = m + n;
  auto coeffs_in_w = [z](const BivariatePolynomial& P) {
    std::vector<LComplex> c(P.degree_w() + 1);
    for (int j = 0; j <= P.degree_w(); ++j) {
      LComplex acc{};
      for (int i = P.degree_z(); i >= 0; --i) acc = acc * z + LComplex(P.at(i, j));
      c[j] = acc;
    }
    return c;
  };
  const auto a = coeffs_in_w(F);
  const auto b = coeffs_in_w(G);

  LMatrix S = LMatrix::Zero(size, size);
  // Rows 0..n-1 hold shifted copies of F (descending powers of w), rows
  // n..n+m-1 shifted copies of G.
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) S(r, r + (m - j)) = a[j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) S(n + r, r + (n - j)) = b[j];
  }
  long double hadamard = 1.0L;
  for (int r = 0; r < size; ++r) hadamard *= S.row(r).norm();
  const LComplex det = size == 0 ? LComplex(1.0L) : S.partialPivLu().determinant();
  return {det, hadamard};
}

}  // namespace

Complex sylvester_determinant(const BivariatePolynomial& F, const BivariatePolynomial& G, Complex z) {
  const LComplex d = sylvester_sample(F, G, LComplex(z)).det;
  return {static_cast<double>(d.real()), static_cast<double>(d.imag())};
}

UnivariatePolynomial sylvester_resultant(const BivariatePolynomial& F, const BivariatePolynomial& G,
                                         double radius_hint) {
  const int m = F.degree_w();
  const int n = G.degree_w();
  if (m < 0 || n < 0 || (m == 0 && n == 0)) {
    throw Error(ErrorKind::invalid_argument, "sylvester_resultant needs deg_w F + deg_w G >= 1");
  }
  // Row-wise degree count: n rows of F-coefficients, m rows of G-coefficients.
  const int degree_bound = n * std::max(F.degree_z(), 0) + m * std::max(G.degree_z(), 0);
  const int nodes = degree_bound + 1;

  // Node circle radius: max(1, Cauchy-type bound of the coefficient magnitudes in z).
  auto coefficient_bound = [](const BivariatePolynomial& P) {
    long double lead = 0.0L;
    long double rest = 0.0L;
    for (int j = 0; j <= P.degree_w(); ++j) {
      lead = std::max(lead, static_cast<long double>(std::abs(P.at(P.degree_z(), j))));
      for (int i = 0; i < P.degree_z(); ++i) rest = std::max(rest, static_cast<long double>(std::abs(P.at(i, j))));
    }
    return lead > 0.0L ? 1.0L + rest / lead : 1.0L;
  };
  const long double outer = std::max({1.0L, coefficient_bound(F), coefficient_bound(G), static_cast<long double>(radius_hint)});

  // One circle per decade between 1 and the outer radius. Each coefficient is
  // taken from the circle where its noise estimate hadamard(r) / r^j is least.
  const int circles = std::clamp(1 + static_cast<int>(std::ceil(std::log10(outer))), 1, 16);
  std::vector<std::vector<LComplex>> estimates(circles);
  std::vector<long double> noise_scale(circles);
  std::vector<long double> radius(circles);
  long double worst_ratio = 0.0L;
  for (int c = 0; c < circles; ++c) {
    radius[c] = circles == 1 ? outer : std::pow(outer, static_cast<long double>(c) / (circles - 1));
    std::vector<LComplex> values(nodes);
    long double hadamard_max = 0.0L;
    for (int k = 0; k < nodes; ++k) {
      const long double theta = 2.0L * std::numbers::pi_v<long double> * k / nodes;
      const LComplex zk = std::polar(radius[c], theta);
      const auto s = sylvester_sample(F, G, zk);
      values[k] = s.det;
      hadamard_max = std::max(hadamard_max, s.hadamard);
      if (s.hadamard > 0.0L) worst_ratio = std::max(worst_ratio, std::abs(s.det) / s.hadamard);
    }
    noise_scale[c] = hadamard_max;
    estimates[c].resize(nodes);
    for (int j = 0; j < nodes; ++j) {
      LComplex acc{};
      for (int k = 0; k < nodes; ++k) {
        const long double theta = -2.0L * std::numbers::pi_v<long double> * static_cast<long double>((static_cast<long long>(j) * k) % nodes) / nodes;
        acc += values[k] * std::polar(1.0L, theta);
      }
      estimates[c][j] = acc / static_cast<long double>(nodes) / std::pow(radius[c], static_cast<long double>(j));
    }
  }
  if (worst_ratio <= 1e-12L) {
    throw Error(ErrorKind::non_isolated, "identically zero resultant: non-isolated zero set");
  }

  std::vector<Complex> coeffs(nodes);
  std::vector<long double> magnitude(nodes);  // max_i |c_i| r^i on the chosen circle, over r^j
  std::vector<long double> noise(nodes);      // hadamard(r) / r^j on the chosen circle
  for (int j = 0; j < nodes; ++j) {
    int best = 0;
    for (int c = 1; c < circles; ++c) {
      if (noise_scale[c] / std::pow(radius[c], static_cast<long double>(j)) <
          noise_scale[best] / std::pow(radius[best], static_cast<long double>(j))) {
        best = c;
      }
    }
    long double top = 0.0L;
    for (int i = 0; i < nodes; ++i) {
      top = std::max(top, std::abs(estimates[best][i]) * std::pow(radius[best], static_cast<long double>(i)));
    }
    const long double rj = std::pow(radius[best], static_cast<long double>(j));
    magnitude[j] = top / rj;
    noise[j] = noise_scale[best] / rj;
    const LComplex v = estimates[best][j];
    coeffs[j] = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }

  // Leading coefficients below 1e-10 of the coefficient magnitude on their
  // circle are beyond the formal degree. Trailing ones are dropped only when
  // they sit at the determinant noise floor: tiny but genuine low-order
  // coefficients carry the roots nearest the origin.
  constexpr long double kLeadingTrim = 1e-10L;
  const long double noise_floor = 1e3L * std::numeric_limits<long double>::epsilon();
  int hi = nodes - 1;
  while (hi > 0 && std::abs(LComplex(coeffs[hi])) <= kLeadingTrim * magnitude[hi]) coeffs[hi--] = {};
  for (int lo = 0; lo < hi && std::abs(LComplex(coeffs[lo])) <= noise_floor * noise[lo]; ++lo) coeffs[lo] = {};
  return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace mixroots
