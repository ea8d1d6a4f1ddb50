#include "mixroots/classify.hpp"

#include <Eigen/Dense>

#include "mixroots/error.hpp"

namespace mixroots {

const char* to_string(PolynomialClass c) noexcept {
  switch (c) {
    case PolynomialClass::L: return "L";
    case PolynomialClass::Lhs: return "Lhs";
    case PolynomialClass::M: return "M";
    case PolynomialClass::other: return "other";
  }
  return "?";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not applicable";
  }
  return "?";
}

std::string ClassTag::to_string() const {
  if (cls == PolynomialClass::other) return "other";
  return std::string(mixroots::to_string(cls)) + "(" + std::to_string(n + m) + ";" + std::to_string(n) + "," +
         std::to_string(m) + ")";
}

bool ClassTag::belongs_to(PolynomialClass c) const noexcept {
  switch (c) {
    case PolynomialClass::L: return cls == PolynomialClass::L;
    case PolynomialClass::Lhs: return cls == PolynomialClass::L || cls == PolynomialClass::Lhs;
    case PolynomialClass::M: return cls != PolynomialClass::other;
    case PolynomialClass::other: return cls == PolynomialClass::other;
  }
  return false;
}

namespace {

bool is_generalized_lens(const MixedPolynomial& f, int n, int m) {
  for (const auto& [e, a] : f.terms()) {
    if (e.zb != 0 && e.zb != m) return false;
  }
  return static_cast<int>(f.slice(m).size()) - 1 == n;
}

// r(zbar) q(z) - p(z): the block of coefficients with mu >= 1 is the outer
// product r_mu q_nu.
bool is_harmonically_splitting(const MixedPolynomial& f, int n, int m) {
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(m, n + 1);
  int max_nu = -1;
  for (const auto& [e, a] : f.terms()) {
    if (e.zb >= 1) {
      block(e.zb - 1, e.zn) = a;
      max_nu = std::max(max_nu, e.zn);
    }
  }
  if (max_nu != n) return false;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block);
  const auto& sv = svd.singularValues();
  if (sv.size() < 2) return true;
  return sv(1) <= kRankOneTolerance * sv(0);
}

}  // namespace

ClassTag classify_polynomial(const MixedPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "cannot classify the zero polynomial");
  const int n = f.holomorphic_degree();
  const int m = f.antiholomorphic_degree();
  ClassTag tag{PolynomialClass::other, n, m};
  if (f.mixed_degree() != n + m) return tag;
  tag.cls = PolynomialClass::M;
  if (m >= 1 && n >= 0) {
    if (is_generalized_lens(f, n, m)) {
      tag.cls = PolynomialClass::L;
    } else if (is_harmonically_splitting(f, n, m)) {
      tag.cls = PolynomialClass::Lhs;
    }
  }
  return tag;
}

namespace {

struct Counts {
  int rho = 0;
  int beta = 0;
  int degenerate = 0;
};

Counts recount(const RootReport& report) {
  Counts c;
  for (const Root& r : report.roots) {
    ++c.rho;
    if (r.sign == RootSign::positive) ++c.beta;
    if (r.sign == RootSign::negative) --c.beta;
    if (r.sign == RootSign::degenerate) ++c.degenerate;
  }
  return c;
}

CheckResult fail(std::string why) { return {Verdict::fail, std::move(why)}; }
CheckResult pass(std::string why) { return {Verdict::pass, std::move(why)}; }
CheckResult not_applicable(std::string why) { return {Verdict::not_applicable, std::move(why)}; }

// Stored rho/beta must agree with the root list.
std::optional<CheckResult> consistency(const RootReport& report, const Counts& c) {
  if (c.rho != report.rho) {
    return fail("stored rho " + std::to_string(report.rho) + " disagrees with " + std::to_string(c.rho) + " listed roots");
  }
  if (c.beta != report.beta) {
    return fail("stored beta " + std::to_string(report.beta) + " disagrees with signed count " + std::to_string(c.beta));
  }
  return std::nullopt;
}

}  // namespace

CheckResult assert_beta(const RootReport& report) {
  const Counts c = recount(report);
  if (report.degenerate_found || c.degenerate > 0) return not_applicable("degenerate roots present");
  const DegreeProfile profile = degrees(report.polynomial);
  if (!profile.top_is_monomial) return not_applicable("top form is not a monomial");
  if (auto bad = consistency(report, c)) return *bad;
  const int expected = profile.top_zn - profile.top_zb;
  if (c.beta != expected) {
    return fail("beta = " + std::to_string(c.beta) + " but n - m = " + std::to_string(expected));
  }
  if (!report.winding || *report.winding != expected) {
    return fail("winding certification does not equal n - m = " + std::to_string(expected));
  }
  return pass("beta = winding = n - m = " + std::to_string(expected));
}

CheckResult assert_rho_bounds(const RootReport& report, const ClassTag& tag, Provenance provenance) {
  const Counts c = recount(report);
  if (c.degenerate > 0 || report.degenerate_found) return not_applicable("degenerate roots present");
  if (auto bad = consistency(report, c)) return *bad;
  if (!tag.belongs_to(PolynomialClass::L)) return not_applicable("bounds are stated for class L only");
  const int n = tag.n;
  const int m = tag.m;
  const int rho = c.rho;
  auto parity_ok = [](int a, int b) { return ((a - b) % 2 + 2) % 2 == 0; };

  int lo = 0;
  int hi = -1;  // -1: no upper bound
  if (m == 1) {
    if (n < 2) return not_applicable("bounds need n >= 2");
    lo = n - 1;
    hi = 5 * n - 5;
  } else if (provenance == Provenance::bifurcation) {
    lo = n + m - 2;
    hi = 5 * n + m - 6;
  } else {
    lo = n - m;
  }
  const std::string range = "[" + std::to_string(lo) + ", " + (hi < 0 ? std::string("inf") : std::to_string(hi)) + "]";
  if (rho < lo || (hi >= 0 && rho > hi)) {
    return fail("rho = " + std::to_string(rho) + " outside " + range);
  }
  if (!parity_ok(rho, n - m)) {
    return fail("rho = " + std::to_string(rho) + " has the wrong parity (n - m = " + std::to_string(n - m) + ")");
  }
  return pass("rho = " + std::to_string(rho) + " in " + range + " with parity of n - m");
}

CheckResult assert_parity(const RootReport& report) {
  const Counts c = recount(report);
  if (c.degenerate > 0 || report.degenerate_found) return not_applicable("degenerate roots present");
  if (((c.rho - c.beta) % 2 + 2) % 2 != 0) return fail("rho and beta differ in parity");
  const DegreeProfile profile = degrees(report.polynomial);
  if (profile.top_is_monomial) {
    const int d = profile.top_zn - profile.top_zb;
    if (((c.rho - d) % 2 + 2) % 2 != 0) {
      return fail("rho = " + std::to_string(c.rho) + " but n - m = " + std::to_string(d) + " has the other parity");
    }
  }
  return pass("rho = " + std::to_string(c.rho) + " has the parity of beta = " + std::to_string(c.beta));
}

}  // namespace mixroots
