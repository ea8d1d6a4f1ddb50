#include "mixroots/mixed_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mixroots/error.hpp"

namespace mixroots {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::zero_polynomial: return "zero polynomial";
    case ErrorKind::non_isolated: return "non-isolated zero set";
    case ErrorKind::no_convergence: return "no convergence";
    case ErrorKind::diverged: return "diverged";
    case ErrorKind::singular_jacobian: return "singular Jacobian";
    case ErrorKind::zero_on_contour: return "zero on contour";
    case ErrorKind::malformed_input: return "malformed input";
  }
  return "unknown";
}

MixedPolynomial::MixedPolynomial(TermMap terms) {
  for (const auto& [e, a] : terms) {
    if (e.zn < 0 || e.zb < 0) {
      throw Error(ErrorKind::invalid_argument, "negative exponent in mixed polynomial");
    }
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorKind::invalid_argument, "non-finite coefficient in mixed polynomial");
    }
  }
  double largest = 0.0;
  for (const auto& [e, a] : terms) largest = std::max(largest, std::abs(a));
  const double cutoff = kTrimTolerance * largest;
  std::erase_if(terms, [cutoff](const auto& kv) {
    return kv.second == Complex{} || std::abs(kv.second) <= cutoff;
  });
  terms_ = std::move(terms);

  for (const auto& [e, a] : terms_) {
    holo_ = std::max(holo_, e.zn);
    antiholo_ = std::max(antiholo_, e.zb);
    mixed_ = std::max(mixed_, e.zn + e.zb);
    max_abs_ = std::max(max_abs_, std::abs(a));
  }
  if (!terms_.empty()) {
    slices_.assign(antiholo_ + 1, {});
    for (const auto& [e, a] : terms_) {
      auto& s = slices_[e.zb];
      if (static_cast<int>(s.size()) <= e.zn) s.resize(e.zn + 1);
      s[e.zn] = a;
    }
  }
}

MixedPolynomial MixedPolynomial::constant(Complex c) { return monomial(c, 0, 0); }

MixedPolynomial MixedPolynomial::monomial(Complex c, int zn, int zb) {
  return MixedPolynomial(TermMap{{Exponent{zn, zb}, c}});
}

MixedPolynomial MixedPolynomial::z() { return monomial(1.0, 1, 0); }
MixedPolynomial MixedPolynomial::zbar() { return monomial(1.0, 0, 1); }

Complex MixedPolynomial::coefficient(int zn, int zb) const {
  auto it = terms_.find(Exponent{zn, zb});
  return it == terms_.end() ? Complex{} : it->second;
}

Complex MixedPolynomial::operator()(Complex z) const {
  const Complex zb = std::conj(z);
  Complex acc{};
  for (auto s = slices_.rbegin(); s != slices_.rend(); ++s) {
    Complex inner{};
    for (auto c = s->rbegin(); c != s->rend(); ++c) inner = inner * z + *c;
    acc = acc * zb + inner;
  }
  return acc;
}

double MixedPolynomial::scale_at(Complex z) const {
  const double r = std::abs(z);
  double s = 0.0;
  for (const auto& [e, a] : terms_) s += std::abs(a) * std::pow(r, e.zn + e.zb);
  return s;
}

double MixedPolynomial::gradient_scale_at(Complex z) const {
  const double r = std::abs(z);
  double s = 0.0;
  for (const auto& [e, a] : terms_) {
    const int d = e.zn + e.zb;
    if (d > 0) s += std::abs(a) * d * std::pow(r, d - 1);
  }
  return s;
}

std::vector<Complex> MixedPolynomial::slice(int mu) const {
  if (mu < 0 || mu >= static_cast<int>(slices_.size())) return {};
  return slices_[mu];
}

MixedPolynomial operator+(const MixedPolynomial& f, const MixedPolynomial& g) {
  auto terms = f.terms();
  for (const auto& [e, a] : g.terms()) terms[e] += a;
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial operator-(const MixedPolynomial& f) { return Complex(-1.0) * f; }

MixedPolynomial operator-(const MixedPolynomial& f, const MixedPolynomial& g) { return f + (-g); }

MixedPolynomial operator*(const MixedPolynomial& f, const MixedPolynomial& g) {
  MixedPolynomial::TermMap terms;
  for (const auto& [ef, a] : f.terms()) {
    for (const auto& [eg, b] : g.terms()) terms[Exponent{ef.zn + eg.zn, ef.zb + eg.zb}] += a * b;
  }
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial operator*(Complex c, const MixedPolynomial& f) {
  auto terms = f.terms();
  for (auto& [e, a] : terms) a *= c;
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial operator*(const MixedPolynomial& f, Complex c) { return c * f; }

MixedPolynomial power(const MixedPolynomial& f, int k) {
  if (k < 0) throw Error(ErrorKind::invalid_argument, "negative power of a mixed polynomial");
  MixedPolynomial result = MixedPolynomial::constant(1.0);
  MixedPolynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MixedPolynomial from_holomorphic(const std::vector<Complex>& ascending) {
  MixedPolynomial::TermMap terms;
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    if (ascending[k] != Complex{}) terms[Exponent{static_cast<int>(k), 0}] = ascending[k];
  }
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial from_antiholomorphic(const std::vector<Complex>& ascending) {
  MixedPolynomial::TermMap terms;
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    if (ascending[k] != Complex{}) terms[Exponent{0, static_cast<int>(k)}] = ascending[k];
  }
  return MixedPolynomial(std::move(terms));
}

WirtingerPair wirtinger(const MixedPolynomial& f) {
  MixedPolynomial::TermMap dz;
  MixedPolynomial::TermMap dzbar;
  for (const auto& [e, a] : f.terms()) {
    if (e.zn > 0) dz[Exponent{e.zn - 1, e.zb}] = static_cast<double>(e.zn) * a;
    if (e.zb > 0) dzbar[Exponent{e.zn, e.zb - 1}] = static_cast<double>(e.zb) * a;
  }
  return {MixedPolynomial(std::move(dz)), MixedPolynomial(std::move(dzbar))};
}

MixedPolynomial conjugate_swap(const MixedPolynomial& f) {
  MixedPolynomial::TermMap terms;
  for (const auto& [e, a] : f.terms()) terms[Exponent{e.zb, e.zn}] = std::conj(a);
  return MixedPolynomial(std::move(terms));
}

DegreeProfile degrees(const MixedPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "zero polynomial has no degree");
  DegreeProfile p;
  p.holo = f.holomorphic_degree();
  p.antiholo = f.antiholomorphic_degree();
  p.mixed = f.mixed_degree();
  const MixedPolynomial top = degree_part(f, p.mixed);
  if (top.size() == 1) {
    const auto& [e, a] = *top.terms().begin();
    p.top_is_monomial = true;
    p.top_zn = e.zn;
    p.top_zb = e.zb;
    p.top_coefficient = a;
  }
  return p;
}

MixedPolynomial degree_part(const MixedPolynomial& f, int l) {
  MixedPolynomial::TermMap terms;
  for (const auto& [e, a] : f.terms()) {
    if (e.zn + e.zb == l) terms.emplace(e, a);
  }
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial recenter(const MixedPolynomial& f, Complex c) {
  // z = u - c, zbar = ubar - conj(c); powers are cached per exponent.
  const MixedPolynomial zu = MixedPolynomial::z() - MixedPolynomial::constant(c);
  const MixedPolynomial zbu = MixedPolynomial::zbar() - MixedPolynomial::constant(std::conj(c));
  std::vector<MixedPolynomial> zpow{MixedPolynomial::constant(1.0)};
  std::vector<MixedPolynomial> zbpow{MixedPolynomial::constant(1.0)};
  for (int k = 1; k <= f.holomorphic_degree(); ++k) zpow.push_back(zpow.back() * zu);
  for (int k = 1; k <= f.antiholomorphic_degree(); ++k) zbpow.push_back(zbpow.back() * zbu);

  MixedPolynomial::TermMap terms;
  for (const auto& [e, a] : f.terms()) {
    const MixedPolynomial piece = zpow[e.zn] * zbpow[e.zb];
    for (const auto& [pe, pa] : piece.terms()) terms[pe] += a * pa;
  }
  return MixedPolynomial(std::move(terms));
}

double root_radius_bound(const MixedPolynomial& f) {
  if (f.is_zero()) return 1.0;
  const int d = f.mixed_degree();
  if (d == 0) return 1.0;

  // Lower bound on |f_d| over the unit circle; falls back to the largest top
  // coefficient when f_d nearly vanishes in some direction.
  const MixedPolynomial top = degree_part(f, d);
  double top_sum = 0.0;
  for (const auto& [e, a] : top.terms()) top_sum += std::abs(a);
  double top_min = top_sum;
  if (top.size() > 1) {
    constexpr int kSamples = 720;
    for (int k = 0; k < kSamples; ++k) {
      const double th = 2.0 * std::numbers::pi * k / kSamples;
      top_min = std::min(top_min, std::abs(top(std::polar(1.0, th))));
    }
    if (top_min < 1e-3 * top_sum) top_min = top_sum;
  }

  std::vector<double> by_degree(d, 0.0);
  for (const auto& [e, a] : f.terms()) {
    const int l = e.zn + e.zb;
    if (l < d) by_degree[l] += std::abs(a);
  }
  // Fujiwara-type bound: |f| >= |f_d| r^d - sum_l A_l r^l > 0 beyond it.
  double bound = 0.0;
  for (int l = 0; l < d; ++l) {
    if (by_degree[l] > 0.0) {
      bound = std::max(bound, std::pow(by_degree[l] / top_min, 1.0 / (d - l)));
    }
  }
  return std::max(1.0, 2.0 * bound);
}

}  // namespace mixroots
