#pragma once

#include <string>

#include "mixroots/mixed_polynomial.hpp"
#include "mixroots/solver.hpp"

namespace mixroots {

/// Lens-type classes, most specific first: L is contained in Lhs, which is
/// contained in M.
enum class PolynomialClass { L, Lhs, M, other };

const char* to_string(PolynomialClass c) noexcept;

struct ClassTag {
  PolynomialClass cls = PolynomialClass::other;
  int n = 0;  // holomorphic degree
  int m = 0;  // antiholomorphic degree

  /// e.g. "L(4;3,1)"; "other" carries no degree triple.
  std::string to_string() const;
  /// Membership, honouring L in Lhs in M.
  bool belongs_to(PolynomialClass c) const noexcept;

  friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

/// Singular-value ratio below which the zbar-block counts as rank one.
inline constexpr double kRankOneTolerance = 1e-9;

/// Syntactic classification in the given coordinate (no affine search):
///   L   zbar^m q(z) - p(z), deg q = n, deg p <= n, m >= 1
///   Lhs r(zbar) q(z) - p(z), detected as a rank-one coefficient block over mu >= 1
///   M   deg f = n + m with n = deg_z f, m = deg_zbar f
ClassTag classify_polynomial(const MixedPolynomial& f);

enum class Verdict { pass, fail, not_applicable };

const char* to_string(Verdict v) noexcept;

struct CheckResult {
  Verdict verdict = Verdict::not_applicable;
  std::string explanation;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

/// Signed count law: beta = n - m for top form z^n zbar^m, with the winding
/// certification agreeing. beta and rho are recounted from the root list, so
/// a report whose stored fields disagree with its roots fails.
CheckResult assert_beta(const RootReport& report);

/// Where a polynomial came from; the admissible rho range depends on it.
enum class Provenance { generic, bifurcation };

/// rho range and parity checks. For L(n+1; n, 1), n >= 2: n - 1 <= rho <= 5n - 5
/// and rho = n - 1 mod 2. For a bifurcation member of L(n+m; n, m):
/// n + m - 2 <= rho <= 5n + m - 6 and rho = n - m mod 2. Generic L with m >= 2:
/// parity and rho >= n - m only.
CheckResult assert_rho_bounds(const RootReport& report, const ClassTag& tag,
                              Provenance provenance = Provenance::generic);

/// rho = beta mod 2 (every simple root contributes +-1 to both).
CheckResult assert_parity(const RootReport& report);

}  // namespace mixroots
