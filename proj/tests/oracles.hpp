#pragma once

// Reference computations written independently of the library: plain sums,
// cofactor determinants and closed forms.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "mixroots/mixed_polynomial.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline Complex naive_eval(const mixroots::MixedPolynomial& f, Complex z) {
  Complex sum{};
  for (const auto& [e, a] : f.terms()) sum += a * std::pow(z, e.zn) * std::pow(std::conj(z), e.zb);
  return sum;
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Coefficients (ascending) of q(u - c).
inline std::vector<Complex> taylor_shift(const std::vector<Complex>& q, Complex c) {
  std::vector<Complex> out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      out[j] += q[k] * binomial(static_cast<int>(k), static_cast<int>(j)) *
                std::pow(-c, static_cast<int>(k - j));
    }
  }
  return out;
}

// Laplace expansion along the first row; fine for the 3x3 and 4x4 cases used here.
inline Complex cofactor_det(const std::vector<std::vector<Complex>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Complex det{};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Complex>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Complex> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(a[r][c]);
      }
      minor.push_back(row);
    }
    det += (col % 2 == 0 ? 1.0 : -1.0) * a[0][col] * cofactor_det(minor);
  }
  return det;
}

inline Complex in_disk(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline mixroots::MixedPolynomial random_polynomial(std::mt19937_64& rng, int max_zn, int max_zb) {
  mixroots::MixedPolynomial::TermMap t;
  for (int nu = 0; nu <= max_zn; ++nu) {
    for (int mu = 0; mu <= max_zb; ++mu) t[{nu, mu}] = in_disk(rng);
  }
  return mixroots::MixedPolynomial(std::move(t));
}

// Roots of zbar^m z^n = 1 with n > m: |z| = 1 and z^(n-m) = 1.
inline std::vector<Complex> power_lens_roots(int n, int m) {
  std::vector<Complex> out;
  for (int k = 0; k < n - m; ++k) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / (n - m)));
  return out;
}

// zbar = gamma (zeta - 1) / t at the nontrivial m-th roots of unity zeta.
inline std::vector<Complex> infinity_roots(Complex gamma, int m, Complex t) {
  std::vector<Complex> out;
  for (int j = 1; j < m; ++j) {
    const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
    out.push_back(std::conj(gamma * (zeta - 1.0) / t));
  }
  return out;
}

}  // namespace oracle
