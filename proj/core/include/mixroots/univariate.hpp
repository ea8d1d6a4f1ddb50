#pragma once

#include <span>
#include <vector>

#include "mixroots/mixed_polynomial.hpp"

namespace mixroots {

/// Dense univariate complex polynomial, ascending coefficients. Trailing
/// (leading-degree) zeros are stripped on construction.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Complex> ascending);

  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Complex leading() const { return coeffs_.back(); }

  Complex operator()(Complex z) const;
  UnivariatePolynomial derivative() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy root bound 1 + max_k |c_k / c_n|.
double cauchy_bound(const UnivariatePolynomial& p);

struct AberthOptions {
  int max_sweeps = 200;
  /// A root is frozen once its correction drops below this times its modulus.
  double tolerance = 1e-13;
  /// After max_sweeps, a last correction above this times the modulus is a failure.
  double failure_tolerance = 1e-8;
};

/// All complex roots, with multiplicity, by simultaneous Aberth-Ehrlich
/// iteration started from the Newton polygon of the coefficient moduli.
/// Exact zero roots are deflated first. Throws Error(no_convergence).
std::vector<Complex> univariate_roots(const UnivariatePolynomial& p, const AberthOptions& options = {});

}  // namespace mixroots
