#include "mixroots/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mixroots/error.hpp"

namespace mixroots {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex UnivariatePolynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto c = coeffs_.rbegin(); c != coeffs_.rend(); ++c) acc = acc * z + *c;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return UnivariatePolynomial(std::move(d));
}

double cauchy_bound(const UnivariatePolynomial& p) {
  if (p.degree() < 1) return 1.0;
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p.coefficients()[k]) / lead);
  return 1.0 + m;
}

namespace {

// Newton ratio p(z)/p'(z). For |z| > 1 the reversed polynomial is used so
// the powers of z cannot overflow: p/p' = z / (n - y r'(y)/r(y)), y = 1/z.
Complex newton_ratio(std::span<const Complex> c, Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = c[n];
    Complex dp{};
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    if (p == Complex{}) return {};
    return p / dp;
  }
  const Complex y = 1.0 / z;
  Complex r = c[0];
  Complex dr{};
  for (int k = 1; k <= n; ++k) {
    dr = dr * y + r;
    r = r * y + c[k];
  }
  if (r == Complex{}) return {};
  return z / (static_cast<double>(n) - y * dr / r);
}

}  // namespace

namespace {

// Starting points from the upper convex hull of (k, log|c_k|): each hull edge
// from i to j contributes j - i points on the circle of radius
// (|c_i| / |c_j|)^(1/(j-i)). Spreads the start across the modulus scales of
// the roots instead of a single circle.
std::vector<Complex> newton_polygon_start(std::span<const Complex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<int> hull;
  auto logabs = [&c](int k) { return c[k] == Complex{} ? -1e300 : std::log(std::abs(c[k])); };
  for (int k = 0; k <= n; ++k) {
    if (c[k] == Complex{}) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      // Drop b when it lies on or below the segment a -> k.
      const double cross = (b - a) * (logabs(k) - logabs(a)) - (k - a) * (logabs(b) - logabs(a));
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<Complex> z;
  z.reserve(n);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = hull[e];
    const int j = hull[e + 1];
    const int count = j - i;
    const double radius = std::exp((logabs(i) - logabs(j)) / count);
    for (int k = 0; k < count; ++k) {
      z.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / count + 2.0 * std::numbers::pi * e / n + 0.4));
    }
  }
  return z;
}

// |p(z)| / sum |c_k| |z|^k: the relative coefficient perturbation that makes
// z an exact root.
double backward_error(std::span<const Complex> c, Complex z) {
  const double r = std::abs(z);
  if (r > 1.0) {
    const Complex y = 1.0 / z;
    const double ry = 1.0 / r;
    Complex v{};
    double mod = 0.0;
    for (const Complex ck : c) {
      v = v * y + ck;
      mod = mod * ry + std::abs(ck);
    }
    return std::abs(v) / mod;
  }
  Complex v{};
  double mod = 0.0;
  for (auto ck = c.rbegin(); ck != c.rend(); ++ck) {
    v = v * z + *ck;
    mod = mod * r + std::abs(*ck);
  }
  return std::abs(v) / mod;
}

constexpr double kBackwardFloor = 4.0 * std::numeric_limits<double>::epsilon();

}  // namespace

std::vector<Complex> univariate_roots(const UnivariatePolynomial& p, const AberthOptions& options) {
  if (p.degree() < 1) throw Error(ErrorKind::invalid_argument, "univariate_roots needs degree >= 1");

  std::vector<Complex> c = p.coefficients();
  std::vector<Complex> roots;
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == Complex{}) ++zeros;
  roots.assign(zeros, Complex{});
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));

  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  std::vector<Complex> z = newton_polygon_start(c);
  std::vector<double> correction(n, std::numeric_limits<double>::infinity());
  std::vector<bool> frozen(n, false);
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    bool moving = false;
    for (int i = 0; i < n; ++i) {
      if (frozen[i]) continue;
      const Complex ratio = newton_ratio(c, z[i]);
      Complex repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio == Complex{} ? Complex{} : ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      correction[i] = std::abs(step);
      if (correction[i] <= options.tolerance * std::abs(z[i]) ||
          backward_error(c, z[i]) <= kBackwardFloor * n) {
        frozen[i] = true;
      } else {
        moving = true;
      }
    }
    if (!moving) break;
  }
  for (int i = 0; i < n; ++i) {
    if (!frozen[i] && !(correction[i] <= options.failure_tolerance * std::abs(z[i])) &&
        !(backward_error(c, z[i]) <= options.failure_tolerance)) {
      throw Error(ErrorKind::no_convergence, "Aberth iteration did not converge");
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace mixroots
