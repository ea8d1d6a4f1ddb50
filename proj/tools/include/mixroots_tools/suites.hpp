#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mixroots/mixed_polynomial.hpp"
#include "mixroots_tools/io.hpp"

namespace mixroots::suites {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;

  bool passed() const;
  int failures() const;
};

std::vector<std::string> suite_names();

/// Throws Error(invalid_argument) for an unknown name.
SuiteResult run_suite(std::string_view name);

/// Re-checks a stored report: stored counts against the root list, residuals
/// and signs at the stored locations, the beta law, parity, rho bounds, and
/// agreement with a fresh solve.
SuiteResult verify_report(const io::ReportFile& file, std::string name = "report");

std::string to_junit(const SuiteResult& suite);

/// Random member of M(n+m; n, m): every coefficient with nu <= n, mu <= m,
/// nu + mu <= n + m is uniform in the unit disk, so the top form is the
/// monomial z^n zbar^m.
MixedPolynomial random_member(int n, int m, std::mt19937_64& rng);

}  // namespace mixroots::suites
