#pragma once

#include <compare>
#include <complex>
#include <map>
#include <vector>

namespace mixroots {

using Complex = std::complex<double>;

/// Exponent pair of the monomial z^zn * conj(z)^zb.
struct Exponent {
  int zn = 0;
  int zb = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Relative trim tolerance applied whenever a polynomial is built: terms with
/// |a| <= kTrimTolerance * max|a| are dropped.
inline constexpr double kTrimTolerance = 1e-13;

/// Sparse mixed polynomial f(z, zbar) = sum a_{nu,mu} z^nu zbar^mu with
/// complex double coefficients. Immutable once built; no stored coefficient
/// is zero.
class MixedPolynomial {
 public:
  using TermMap = std::map<Exponent, Complex>;

  MixedPolynomial() = default;
  explicit MixedPolynomial(TermMap terms);

  static MixedPolynomial constant(Complex c);
  static MixedPolynomial monomial(Complex c, int zn, int zb);
  /// The coordinate functions z and zbar.
  static MixedPolynomial z();
  static MixedPolynomial zbar();

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Complex coefficient(int zn, int zb) const;

  int holomorphic_degree() const noexcept { return holo_; }
  int antiholomorphic_degree() const noexcept { return antiholo_; }
  int mixed_degree() const noexcept { return mixed_; }
  double max_coefficient() const noexcept { return max_abs_; }

  /// Nested evaluation: Horner in z inside each zbar-slice, then Horner in
  /// zbar across slices.
  Complex operator()(Complex z) const;

  /// sum |a_{nu,mu}| |z|^(nu+mu); the natural magnitude of f near z.
  double scale_at(Complex z) const;
  /// sum |a_{nu,mu}| (nu+mu) |z|^(nu+mu-1); magnitude of the gradient near z.
  double gradient_scale_at(Complex z) const;

  /// Dense coefficients of the zbar^mu slice, ascending in nu (empty if absent).
  std::vector<Complex> slice(int mu) const;

  friend bool operator==(const MixedPolynomial&, const MixedPolynomial&) = default;

 private:
  TermMap terms_;
  int holo_ = 0;
  int antiholo_ = 0;
  int mixed_ = 0;
  double max_abs_ = 0.0;
  // slices_[mu][nu] = a_{nu,mu}, used by the nested evaluator.
  std::vector<std::vector<Complex>> slices_;
};

MixedPolynomial operator+(const MixedPolynomial& f, const MixedPolynomial& g);
MixedPolynomial operator-(const MixedPolynomial& f, const MixedPolynomial& g);
MixedPolynomial operator-(const MixedPolynomial& f);
MixedPolynomial operator*(const MixedPolynomial& f, const MixedPolynomial& g);
MixedPolynomial operator*(Complex c, const MixedPolynomial& f);
MixedPolynomial operator*(const MixedPolynomial& f, Complex c);

inline MixedPolynomial add(const MixedPolynomial& f, const MixedPolynomial& g) { return f + g; }
inline MixedPolynomial multiply(const MixedPolynomial& f, const MixedPolynomial& g) { return f * g; }
inline MixedPolynomial scale(const MixedPolynomial& f, Complex c) { return c * f; }
MixedPolynomial power(const MixedPolynomial& f, int k);

/// Holomorphic polynomial sum c_k z^k (ascending coefficients).
MixedPolynomial from_holomorphic(const std::vector<Complex>& ascending);
/// Antiholomorphic polynomial sum c_k zbar^k (ascending coefficients).
MixedPolynomial from_antiholomorphic(const std::vector<Complex>& ascending);

struct WirtingerPair {
  MixedPolynomial dz;
  MixedPolynomial dzbar;
};

/// Formal derivatives treating z and zbar as independent variables.
WirtingerPair wirtinger(const MixedPolynomial& f);

/// g with g_{mu,nu} = conj(a_{nu,mu}); g(z) = conj(f(z)) pointwise. An involution.
MixedPolynomial conjugate_swap(const MixedPolynomial& f);

struct DegreeProfile {
  int holo = 0;
  int antiholo = 0;
  int mixed = 0;
  /// True iff the degree-`mixed` part is a single monomial c z^top_zn zbar^top_zb.
  bool top_is_monomial = false;
  int top_zn = 0;
  int top_zb = 0;
  /// Coefficient of the top monomial; zero when the top part is not a monomial.
  Complex top_coefficient{};
};

/// Throws Error(zero_polynomial) for the zero polynomial.
DegreeProfile degrees(const MixedPolynomial& f);

/// Homogeneous part f_l: the terms with nu + mu == l.
MixedPolynomial degree_part(const MixedPolynomial& f, int l);

/// g(u, ubar) = f(u - c, conj(u - c)), expanded.
MixedPolynomial recenter(const MixedPolynomial& f, Complex c);

/// Radius outside which no zero of f can lie when its top part is a monomial;
/// a heuristic magnitude otherwise. Always >= 1.
double root_radius_bound(const MixedPolynomial& f);

}  // namespace mixroots
