#include "mixroots/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mixroots/error.hpp"

namespace mixroots {

BivariatePolynomial::BivariatePolynomial(int deg_z, int deg_w)
    : deg_z_(deg_z), deg_w_(deg_w), c_(static_cast<std::size_t>(deg_z + 1) * (deg_w + 1)) {}

Complex BivariatePolynomial::operator()(Complex z, Complex w) const {
  Complex acc{};
  for (int i = deg_z_; i >= 0; --i) {
    Complex row{};
    for (int j = deg_w_; j >= 0; --j) row = row * w + at(i, j);
    acc = acc * z + row;
  }
  return acc;
}

std::vector<Complex> BivariatePolynomial::in_w(Complex z) const {
  std::vector<Complex> c(deg_w_ + 1);
  for (int j = 0; j <= deg_w_; ++j) {
    Complex acc{};
    for (int i = deg_z_; i >= 0; --i) acc = acc * z + at(i, j);
    c[j] = acc;
  }
  return c;
}

BivariatePair bivariate_pair(const MixedPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "bivariate_pair of the zero polynomial");
  const int n = f.holomorphic_degree();
  const int m = f.antiholomorphic_degree();
  BivariatePair pair{BivariatePolynomial(n, m), BivariatePolynomial(m, n)};
  for (const auto& [e, a] : f.terms()) {
    pair.F.at(e.zn, e.zb) = a;
    pair.G.at(e.zb, e.zn) = std::conj(a);
  }
  return pair;
}

std::vector<Complex> conjugacy_filter(const MixedPolynomial& f, const std::vector<Complex>& candidates) {
  std::vector<Complex> kept;
  for (const Complex z : candidates) {
    if (std::abs(f(z)) <= 1e-6 * f.scale_at(z)) kept.push_back(z);
  }
  return kept;
}

const char* sign_symbol(RootSign s) noexcept {
  switch (s) {
    case RootSign::positive: return "+";
    case RootSign::negative: return "-";
    case RootSign::degenerate: return "0";
  }
  return "?";
}

Root classify_root(const MixedPolynomial& f, Complex z) {
  const auto d = wirtinger(f);
  Root r;
  r.location = z;
  r.jacobian = std::norm(d.dz(z)) - std::norm(d.dzbar(z));
  r.residual = std::abs(f(z));
  const double gs = f.gradient_scale_at(z);
  const double threshold = kDegenerateThreshold * gs * gs;
  if (r.jacobian > threshold) {
    r.sign = RootSign::positive;
  } else if (r.jacobian < -threshold) {
    r.sign = RootSign::negative;
  } else {
    r.sign = RootSign::degenerate;
  }
  return r;
}

Root newton_polish(const MixedPolynomial& f, Complex z0) {
  constexpr int kMaxSteps = 100;
  const auto d = wirtinger(f);
  Complex z = z0;
  for (int step = 0; step <= kMaxSteps; ++step) {
    const Complex value = f(z);
    if (std::abs(value) <= 1e-11 * f.scale_at(z)) {
      Root r = classify_root(f, z);
      r.newton_iterations = step;
      return r;
    }
    if (step == kMaxSteps) break;
    // d/dx f = f_z + f_zbar, d/dy f = i (f_z - f_zbar).
    const Complex fz = d.dz(z);
    const Complex fzb = d.dzbar(z);
    const Complex fx = fz + fzb;
    const Complex fy = Complex(0.0, 1.0) * (fz - fzb);
    const double gx = fx.real();
    const double hx = fx.imag();
    const double gy = fy.real();
    const double hy = fy.imag();
    const double jac = gx * hy - gy * hx;
    const double gs = f.gradient_scale_at(z);
    if (std::abs(jac) < 1e-12 * gs * gs || jac == 0.0) {
      throw Error(ErrorKind::singular_jacobian, "singular Jacobian during Newton polish");
    }
    const double dx = (-value.real() * hy + value.imag() * gy) / jac;
    const double dy = (-gx * value.imag() + hx * value.real()) / jac;
    const Complex delta(dx, dy);
    z += delta;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    if (std::abs(delta) < 1e-14 * (1.0 + std::abs(z))) {
      Root r = classify_root(f, z);
      r.newton_iterations = step + 1;
      return r;
    }
  }
  throw Error(ErrorKind::diverged, "Newton polish diverged");
}

namespace {

struct ArcSample {
  double theta;
  Complex value;
};

double arc_argument(const MixedPolynomial& f, const Contour& c, const ArcSample& a, const ArcSample& b,
                    int depth) {
  const double step = std::arg(b.value / a.value);
  if (std::abs(step) < c.max_arg_step) return step;
  if (depth >= c.max_refinement_depth) {
    throw Error(ErrorKind::zero_on_contour, "argument step unresolved: zero on contour");
  }
  const double mid = 0.5 * (a.theta + b.theta);
  const Complex z = c.center + std::polar(c.radius, mid);
  const ArcSample m{mid, f(z)};
  if (std::abs(m.value) < 1e-9 * f.scale_at(z)) {
    throw Error(ErrorKind::zero_on_contour, "zero on contour");
  }
  return arc_argument(f, c, a, m, depth + 1) + arc_argument(f, c, m, b, depth + 1);
}

}  // namespace

int winding_number(const MixedPolynomial& f, const Contour& c) {
  if (!(c.radius > 0.0)) throw Error(ErrorKind::invalid_argument, "contour radius must be positive");
  if (!(c.max_arg_step > 0.0) || c.max_arg_step > std::numbers::pi / 2) {
    throw Error(ErrorKind::invalid_argument, "max_arg_step must lie in (0, pi/2]");
  }
  if (f.is_zero()) throw Error(ErrorKind::zero_on_contour, "zero polynomial vanishes on every contour");

  const int samples = std::max(64, 8 * (f.mixed_degree() + 1));
  std::vector<ArcSample> ring(samples + 1);
  for (int k = 0; k <= samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    const Complex z = c.center + std::polar(c.radius, th);
    ring[k] = {th, f(z)};
    if (std::abs(ring[k].value) < 1e-9 * f.scale_at(z)) {
      throw Error(ErrorKind::zero_on_contour, "zero on contour");
    }
  }
  double total = 0.0;
  for (int k = 0; k < samples; ++k) total += arc_argument(f, c, ring[k], ring[k + 1], 0);
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

int count_sign(const std::vector<Root>& roots, RootSign s) {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [s](const Root& r) { return r.sign == s; }));
}

std::vector<Root> dedupe_and_sort(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.residual < b.residual; });
  std::vector<Root> kept;
  for (const Root& r : roots) {
    const bool seen = std::any_of(kept.begin(), kept.end(), [&r](const Root& k) {
      return std::abs(k.location - r.location) <= kDedupeRadius * (1.0 + std::abs(k.location));
    });
    if (!seen) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end(), [](const Root& a, const Root& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return kept;
}

std::vector<Root> grid_newton_oracle(const MixedPolynomial& f, const Window& window, int grid_n) {
  if (grid_n < 2) throw Error(ErrorKind::invalid_argument, "grid_newton_oracle needs grid_n >= 2");
  std::vector<Root> found;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double x = window.x0 + (window.x1 - window.x0) * i / (grid_n - 1);
      const double y = window.y0 + (window.y1 - window.y0) * j / (grid_n - 1);
      try {
        Root r = newton_polish(f, Complex(x, y));
        if (r.residual <= 1e-9 * f.scale_at(r.location)) found.push_back(r);
      } catch (const Error&) {
        // Starts that fail to converge carry no information.
      }
    }
  }
  return dedupe_and_sort(std::move(found));
}

namespace {

std::vector<Complex> eliminant_candidates(const MixedPolynomial& f) {
  const int n = f.holomorphic_degree();
  const int m = f.antiholomorphic_degree();
  if (n == 0 && m == 0) return {};
  if (m == 0) {
    return univariate_roots(UnivariatePolynomial(f.slice(0)));
  }
  if (n == 0) {
    // f depends on zbar only: conj(z) runs over the roots of sum a_mu w^mu.
    std::vector<Complex> w(m + 1);
    for (const auto& [e, a] : f.terms()) w[e.zb] = a;
    auto roots = univariate_roots(UnivariatePolynomial(std::move(w)));
    for (auto& r : roots) r = std::conj(r);
    return roots;
  }
  const auto pair = bivariate_pair(f);
  const UnivariatePolynomial eliminant = sylvester_resultant(pair.F, pair.G, root_radius_bound(f));
  if (eliminant.degree() < 1) return {};
  return univariate_roots(eliminant);
}

}  // namespace

RootReport solve_all(const MixedPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::zero_polynomial, "zero polynomial has no isolated roots");

  RootReport report;
  report.polynomial = f;

  const std::vector<Complex> candidates = eliminant_candidates(f);
  const std::vector<Complex> accepted = conjugacy_filter(f, candidates);

  std::vector<Root> roots;
  roots.reserve(accepted.size());
  for (const Complex z : accepted) {
    try {
      roots.push_back(newton_polish(f, z));
    } catch (const Error& e) {
      // Filter-accepted candidates where Newton cannot proceed sit at a
      // singular point: report them as degenerate rather than dropping them.
      if (e.kind() != ErrorKind::singular_jacobian && e.kind() != ErrorKind::diverged) throw;
      Root r = classify_root(f, z);
      r.sign = RootSign::degenerate;
      roots.push_back(r);
    }
  }
  // Eliminant roots in a near-multiple cluster (a true root next to
  // non-conjugate partners) are only accurate to a fraction of the cluster
  // width and can fail the filter. Each rejected candidate gets one Newton
  // attempt; a converged zero of f is genuine whatever its start.
  for (const Complex z : candidates) {
    if (std::find(accepted.begin(), accepted.end(), z) != accepted.end()) continue;
    try {
      const Root r = newton_polish(f, z);
      if (r.residual <= 1e-9 * f.scale_at(r.location)) roots.push_back(r);
    } catch (const Error&) {
    }
  }
  report.roots = dedupe_and_sort(std::move(roots));
  report.rho = static_cast<int>(report.roots.size());
  report.beta = count_sign(report.roots, RootSign::positive) - count_sign(report.roots, RootSign::negative);
  report.degenerate_found = count_sign(report.roots, RootSign::degenerate) > 0;

  double max_modulus = 0.0;
  for (const Root& r : report.roots) max_modulus = std::max(max_modulus, std::abs(r.location));
  // Never smaller than the a-priori root radius, so a root the eliminant
  // missed outside the found set still changes the winding number.
  report.certification_radius = std::max(2.0 * max_modulus + 1.0, root_radius_bound(f));
  try {
    report.winding = winding_number(f, Contour{Complex{}, report.certification_radius});
    report.winding_certified = !report.degenerate_found && *report.winding == report.beta;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::zero_on_contour) throw;
    report.winding_certified = false;
  }
  return report;
}

}  // namespace mixroots
