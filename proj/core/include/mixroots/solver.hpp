#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixroots/mixed_polynomial.hpp"
#include "mixroots/univariate.hpp"

namespace mixroots {

/// Dense bivariate polynomial sum c[i][j] z^i w^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  BivariatePolynomial(int deg_z, int deg_w);

  int degree_z() const noexcept { return deg_z_; }
  int degree_w() const noexcept { return deg_w_; }
  Complex& at(int i, int j) { return c_[static_cast<std::size_t>(i) * (deg_w_ + 1) + j]; }
  Complex at(int i, int j) const { return c_[static_cast<std::size_t>(i) * (deg_w_ + 1) + j]; }

  Complex operator()(Complex z, Complex w) const;
  /// Coefficients in w (ascending) of the univariate specialisation at z.
  std::vector<Complex> in_w(Complex z) const;

 private:
  int deg_z_ = -1;
  int deg_w_ = -1;
  std::vector<Complex> c_;
};

/// F(z,w) = sum a z^nu w^mu and its companion G(z,w) = sum conj(a) w^nu z^mu.
/// Zeros of f map to common zeros (z, conj z) of F and G.
struct BivariatePair {
  BivariatePolynomial F;
  BivariatePolynomial G;
};

BivariatePair bivariate_pair(const MixedPolynomial& f);

/// det of the Sylvester matrix of F(z, .) and G(z, .) in w at a fixed z.
Complex sylvester_determinant(const BivariatePolynomial& F, const BivariatePolynomial& G, Complex z);

/// Res_w(F, G) as a polynomial in z, recovered by evaluation on circles and
/// inverse DFT. Throws Error(non_isolated) when the resultant vanishes
/// identically (F and G share a component). `radius_hint` widens the outermost
/// interpolation circle to cover roots known to lie that far out.
UnivariatePolynomial sylvester_resultant(const BivariatePolynomial& F, const BivariatePolynomial& G,
                                         double radius_hint = 1.0);

/// Keeps the candidates z with |f(z)| <= 1e-6 * scale_at(z).
std::vector<Complex> conjugacy_filter(const MixedPolynomial& f, const std::vector<Complex>& candidates);

enum class RootSign { positive, negative, degenerate };

const char* sign_symbol(RootSign s) noexcept;  // "+", "-", "0"

struct Root {
  Complex location;
  /// g_x h_y - g_y h_x = |f_z|^2 - |f_zbar|^2 at location.
  double jacobian = 0.0;
  RootSign sign = RootSign::degenerate;
  double residual = 0.0;
  int newton_iterations = 0;
};

/// |J| below this times gradient_scale_at(z)^2 is reported degenerate.
inline constexpr double kDegenerateThreshold = 1e-8;
/// Roots closer than this times (1 + |z|) are the same root.
inline constexpr double kDedupeRadius = 1e-6;

/// Sign classification of the Jacobian at z against the degenerate threshold.
Root classify_root(const MixedPolynomial& f, Complex z);

/// Real 2x2 Newton on (Re f, Im f) over (x, y). Throws Error(diverged) after
/// 100 steps and Error(singular_jacobian) when |J| collapses mid-iteration.
Root newton_polish(const MixedPolynomial& f, Complex z0);

struct Contour {
  Complex center{};
  double radius = 1.0;
  double max_arg_step = 0.5;
  int max_refinement_depth = 30;
};

/// Winding number of f around the circle, by adaptive argument tracking.
/// Throws Error(zero_on_contour) when f (nearly) vanishes on it.
int winding_number(const MixedPolynomial& f, const Contour& c);

struct Window {
  double x0 = -1.0;
  double x1 = 1.0;
  double y0 = -1.0;
  double y1 = 1.0;
};

/// Newton from every node of a grid_n x grid_n lattice, deduplicated and
/// sorted. No completeness claim; used to cross-check solve_all.
std::vector<Root> grid_newton_oracle(const MixedPolynomial& f, const Window& window, int grid_n);

struct RootReport {
  MixedPolynomial polynomial;
  std::vector<Root> roots;  // sorted by (real, imag)
  int rho = 0;
  int beta = 0;
  bool winding_certified = false;
  bool degenerate_found = false;
  /// Winding number on the certification circle, when it could be computed.
  std::optional<int> winding;
  double certification_radius = 0.0;
};

int count_sign(const std::vector<Root>& roots, RootSign s);

/// Complete root set through resultant elimination, Newton polishing and
/// winding certification. Throws Error(non_isolated) for curve components.
RootReport solve_all(const MixedPolynomial& f);

/// Deduplicates (keeping the smaller residual) and sorts by (real, imag).
std::vector<Root> dedupe_and_sort(std::vector<Root> roots);

}  // namespace mixroots
