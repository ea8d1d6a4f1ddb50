#include "mixroots_tools/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "mixroots/classify.hpp"
#include "mixroots/error.hpp"
#include "mixroots/families.hpp"
#include "mixroots/solver.hpp"

namespace mixroots::suites {

bool SuiteResult::passed() const { return failures() == 0; }

int SuiteResult::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

MixedPolynomial random_member(int n, int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  MixedPolynomial::TermMap terms;
  for (int nu = 0; nu <= n; ++nu) {
    for (int mu = 0; mu <= m; ++mu) {
      const double r = std::sqrt(unit(rng));
      const double th = 2.0 * std::numbers::pi * unit(rng);
      terms[{nu, mu}] = std::polar(r, th);
    }
  }
  return MixedPolynomial(std::move(terms));
}

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

using Check = std::function<Outcome()>;

CaseResult run_case(const std::string& name, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult r{name, false, "", 0.0};
  try {
    const Outcome o = check();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string counts(const RootReport& r) {
  return "rho=" + std::to_string(r.rho) + " beta=" + std::to_string(r.beta) +
         (r.winding_certified ? " certified" : " uncertified");
}

bool all_simple(const RootReport& r) { return !r.degenerate_found && count_sign(r.roots, RootSign::degenerate) == 0; }

Outcome expect_counts(const MixedPolynomial& f, int rho, int beta) {
  const RootReport r = solve_all(f);
  const bool ok = r.rho == rho && r.beta == beta && all_simple(r) && r.winding_certified;
  return {ok, counts(r) + " (expected rho=" + std::to_string(rho) + " beta=" + std::to_string(beta) + ")"};
}

// The m - 1 roots of largest modulus must be negative and sit near the predictions.
Outcome infinity_roots_near_prediction(const RootReport& r, Complex gamma, int m, Complex t, double rel_tol) {
  std::vector<Root> roots = r.roots;
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return std::abs(a.location) > std::abs(b.location); });
  std::ostringstream detail;
  bool ok = static_cast<int>(roots.size()) >= m - 1;
  for (const Complex p : predict_infinity_roots(gamma, m, t)) {
    double best = 1e300;
    RootSign sign = RootSign::degenerate;
    for (int k = 0; k < m - 1 && k < static_cast<int>(roots.size()); ++k) {
      const double d = std::abs(roots[k].location - p) / std::abs(p);
      if (d < best) {
        best = d;
        sign = roots[k].sign;
      }
    }
    ok = ok && best <= rel_tol && sign == RootSign::negative;
    detail << "rel=" << best << " sign=" << sign_symbol(sign) << "; ";
  }
  return {ok, detail.str()};
}

std::vector<CaseResult> paper_goldens() {
  std::vector<CaseResult> out;
  out.push_back(run_case("rhie3 rho=10 beta=2", [] {
    const RootReport r = solve_all(rhie3());
    bool ok = r.rho == 10 && r.beta == 2 && all_simple(r) && r.winding_certified;
    for (const Root& root : r.roots) ok = ok && root.residual <= 1e-9;
    return Outcome{ok, counts(r)};
  }));
  out.push_back(run_case("rhie3 class L(4;3,1)", [] {
    const ClassTag tag = classify_polynomial(rhie3());
    return Outcome{tag == ClassTag{PolynomialClass::L, 3, 1}, tag.to_string()};
  }));
  out.push_back(run_case("rhie3 beta law and rho bound", [] {
    const RootReport r = solve_all(rhie3());
    const CheckResult b = assert_beta(r);
    const CheckResult rb = assert_rho_bounds(r, classify_polynomial(r.polynomial));
    return Outcome{b.passed() && rb.passed(), b.explanation + "; " + rb.explanation};
  }));
  out.push_back(run_case("example rho=12 beta=0, six of each sign", [] {
    const RootReport r = solve_all(example_f());
    const bool ok = r.rho == 12 && r.beta == 0 && count_sign(r.roots, RootSign::positive) == 6 &&
                    count_sign(r.roots, RootSign::negative) == 6 && r.winding_certified;
    return Outcome{ok, counts(r)};
  }));
  out.push_back(run_case("example large roots near -150 +- 86.6i", [] {
    const RootReport r = solve_all(example_f());
    bool ok = true;
    std::ostringstream detail;
    for (const Complex w : {Complex(-150.0, 86.6), Complex(-150.0, -86.6)}) {
      const auto it = std::min_element(r.roots.begin(), r.roots.end(), [w](const Root& a, const Root& b) {
        return std::abs(a.location - w) < std::abs(b.location - w);
      });
      const double d = it == r.roots.end() ? 1e300 : std::abs(it->location - w);
      ok = ok && d <= 0.5 && it->sign == RootSign::negative;
      detail << "dist=" << d << "; ";
    }
    return Outcome{ok, detail.str()};
  }));
  out.push_back(run_case("example winding on radius 500 is 0", [] {
    const int w = winding_number(example_f(), Contour{Complex{}, 500.0});
    return Outcome{w == 0, "winding=" + std::to_string(w)};
  }));
  out.push_back(run_case("phi_t over rhie3, m=3: rho=12=5n+m-6", [] {
    return expect_counts(phi_t({rhie3(), 3, 1e-3 * 0.03, BifurcationVariant::phi}), 12, 0);
  }));
  out.push_back(run_case("psi_t over rhie3, m=2: rho=11", [] {
    return expect_counts(psi_t({rhie3(), 2, 1e-3, BifurcationVariant::psi}), 11, 1);
  }));
  out.push_back(run_case("power lens (5,2): rho=3 beta=3", [] { return expect_counts(power_lens(5, 2), 3, 3); }));
  out.push_back(run_case("predicted infinity roots for gamma/t=100, m=3", [] {
    const auto p = predict_infinity_roots(1.0, 3, 0.01);
    bool ok = p.size() == 2;
    for (const Complex z : p) {
      ok = ok && std::abs(z.real() + 150.0) < 0.05 && std::abs(std::abs(z.imag()) - 86.6) < 0.05;
    }
    return Outcome{ok, ok ? "ok" : "mismatch"};
  }));
  out.push_back(run_case("non-isolated: z zbar - 1 and zbar - z", [] {
    int errors = 0;
    for (const MixedPolynomial& f : {MixedPolynomial::z() * MixedPolynomial::zbar() - MixedPolynomial::constant(1.0),
                                     MixedPolynomial::zbar() - MixedPolynomial::z()}) {
      try {
        solve_all(f);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::non_isolated) ++errors;
      }
    }
    return Outcome{errors == 2, std::to_string(errors) + " of 2 rejected as non-isolated"};
  }));
  return out;
}

std::vector<CaseResult> beta_random() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(20260101);
  int degenerate = 0;
  for (int k = 0; k < 100; ++k) {
    const MixedPolynomial f = random_member(3, 2, rng);
    out.push_back(run_case("M(5;3,2) #" + std::to_string(k), [&f, &degenerate] {
      const RootReport r = solve_all(f);
      if (r.degenerate_found) {
        ++degenerate;
        return Outcome{true, "degenerate draw excluded"};
      }
      const CheckResult b = assert_beta(r);
      return Outcome{b.passed(), b.explanation};
    }));
  }
  out.push_back(run_case("degenerate draws below 5%", [&degenerate] {
    return Outcome{degenerate < 5, std::to_string(degenerate) + " of 100"};
  }));
  return out;
}

// Equal root sets: every root of a has a partner in b of the same sign within tol, and vice versa.
bool same_roots(const std::vector<Root>& a, const std::vector<Root>& b, double tol) {
  if (a.size() != b.size()) return false;
  auto covered = [tol](const std::vector<Root>& x, const std::vector<Root>& y) {
    return std::all_of(x.begin(), x.end(), [&](const Root& r) {
      return std::any_of(y.begin(), y.end(), [&](const Root& s) {
        return s.sign == r.sign && std::abs(s.location - r.location) <= tol * (1.0 + std::abs(r.location));
      });
    });
  };
  return covered(a, b) && covered(b, a);
}

std::vector<CaseResult> oracle() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(7);
  const int pairs[][2] = {{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 1}};
  for (int k = 0; k < 20; ++k) {
    const int n = pairs[k % 5][0];
    const int m = pairs[k % 5][1];
    const MixedPolynomial f = random_member(n, m, rng);
    out.push_back(run_case("oracle M(" + std::to_string(n + m) + ";" + std::to_string(n) + "," + std::to_string(m) +
                               ") #" + std::to_string(k),
                           [&f] {
                             const RootReport r = solve_all(f);
                             const double R = 2.0 * root_radius_bound(f);
                             const auto grid = grid_newton_oracle(f, Window{-R, R, -R, R}, 60);
                             const bool ok = same_roots(r.roots, grid, 1e-6);
                             return Outcome{ok, "solve_all " + std::to_string(r.roots.size()) + " roots, grid " +
                                                    std::to_string(grid.size())};
                           }));
  }
  return out;
}

std::vector<CaseResult> bifurcation() {
  std::vector<CaseResult> out;
  const Complex gamma = split_lens(rhie3()).gamma;
  for (int m : {2, 3, 4}) {
    out.push_back(run_case("phi_t m=" + std::to_string(m), [m, gamma] {
      const Complex t = 1e-3 * std::abs(gamma);
      const RootReport r = solve_all(phi_t({rhie3(), m, t, BifurcationVariant::phi}));
      const Outcome near = infinity_roots_near_prediction(r, gamma, m, t, 0.1);
      const bool ok = r.rho == 9 + m && r.beta == 3 - m && all_simple(r) && near.passed;
      return Outcome{ok, counts(r) + "; " + near.detail};
    }));
  }
  for (int m : {2, 3}) {
    out.push_back(run_case("psi_t m=" + std::to_string(m), [m] {
      const RootReport r = solve_all(psi_t({rhie3(), m, 1e-3, BifurcationVariant::psi}));
      return Outcome{r.rho == 9 + m && r.beta == 3 - m && all_simple(r), counts(r)};
    }));
  }
  out.push_back(run_case("phi_t over zbar z^3 - 1, m=2: rho=3", [] {
    return expect_counts(phi_t({power_lens(3, 1), 2, 1e-3, BifurcationVariant::phi}), 3, 1);
  }));
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper-goldens", "beta-random", "oracle", "bifurcation"}; }

SuiteResult run_suite(std::string_view name) {
  SuiteResult s{std::string(name), {}};
  if (name == "paper-goldens") s.cases = paper_goldens();
  else if (name == "beta-random") s.cases = beta_random();
  else if (name == "oracle") s.cases = oracle();
  else if (name == "bifurcation") s.cases = bifurcation();
  else throw Error(ErrorKind::invalid_argument, "unknown suite \"" + std::string(name) + "\"");
  return s;
}

SuiteResult verify_report(const io::ReportFile& file, std::string name) {
  const RootReport& r = file.report;
  SuiteResult s{std::move(name), {}};
  s.cases.push_back(run_case("stored counts match root list", [&r] {
    int beta = count_sign(r.roots, RootSign::positive) - count_sign(r.roots, RootSign::negative);
    const bool ok = r.rho == static_cast<int>(r.roots.size()) && r.beta == beta;
    return Outcome{ok, "stored rho=" + std::to_string(r.rho) + " beta=" + std::to_string(r.beta) + ", listed " +
                           std::to_string(r.roots.size()) + " roots with signed count " + std::to_string(beta)};
  }));
  s.cases.push_back(run_case("roots are zeros with their stated signs", [&r] {
    for (const Root& root : r.roots) {
      const Root fresh = classify_root(r.polynomial, root.location);
      if (fresh.residual > 1e-9 * r.polynomial.scale_at(root.location)) {
        return Outcome{false, "nonzero residual at " + io::format15(root.location.real()) + "," +
                                  io::format15(root.location.imag())};
      }
      if (fresh.sign != root.sign) {
        return Outcome{false, "sign mismatch at " + io::format15(root.location.real()) + "," +
                                  io::format15(root.location.imag())};
      }
    }
    return Outcome{true, std::to_string(r.roots.size()) + " roots checked"};
  }));
  s.cases.push_back(run_case("beta law", [&r] {
    const CheckResult c = assert_beta(r);
    return Outcome{c.verdict != Verdict::fail, std::string(to_string(c.verdict)) + ": " + c.explanation};
  }));
  s.cases.push_back(run_case("parity", [&r] {
    const CheckResult c = assert_parity(r);
    return Outcome{c.verdict != Verdict::fail, std::string(to_string(c.verdict)) + ": " + c.explanation};
  }));
  s.cases.push_back(run_case("rho bounds", [&r, &file] {
    const CheckResult c = assert_rho_bounds(r, file.tag);
    return Outcome{c.verdict != Verdict::fail, std::string(to_string(c.verdict)) + ": " + c.explanation};
  }));
  s.cases.push_back(run_case("class tag", [&r, &file] {
    const ClassTag tag = classify_polynomial(r.polynomial);
    return Outcome{tag == file.tag, "stored " + file.tag.to_string() + ", computed " + tag.to_string()};
  }));
  s.cases.push_back(run_case("agrees with a fresh solve", [&r] {
    const RootReport fresh = solve_all(r.polynomial);
    return Outcome{same_roots(fresh.roots, r.roots, 1e-6), "fresh " + counts(fresh)};
  }));
  return s;
}

std::string to_junit(const SuiteResult& suite) {
  std::ostringstream out;
  double total = 0.0;
  for (const CaseResult& c : suite.cases) total += c.seconds;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"" << xml_escape(suite.name) << "\" tests=\"" << suite.cases.size() << "\" failures=\""
      << suite.failures() << "\" time=\"" << io::format15(total) << "\">\n";
  for (const CaseResult& c : suite.cases) {
    out << "  <testcase classname=\"" << xml_escape(suite.name) << "\" name=\"" << xml_escape(c.name) << "\" time=\""
        << io::format15(c.seconds) << "\">";
    if (!c.passed) out << "<failure message=\"" << xml_escape(c.detail) << "\"/>";
    else out << "<system-out>" << xml_escape(c.detail) << "</system-out>";
    out << "</testcase>\n";
  }
  out << "</testsuite>\n";
  return out.str();
}

}  // namespace mixroots::suites
