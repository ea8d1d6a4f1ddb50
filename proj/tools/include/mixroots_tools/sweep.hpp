#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixroots/families.hpp"
#include "mixroots/solver.hpp"
#include "mixroots_tools/io.hpp"

namespace mixroots::sweep {

/// A phi or psi family with t running through start * ratio^k, k < count,
/// optionally preceded by t = 0.
struct SweepSpec {
  BifurcationSpec family;
  Complex start{1e-2, 0.0};
  double ratio = 0.5;
  int count = 6;
  bool leading_zero = false;
  /// Roots outside are not reported; everything is reported when absent.
  std::optional<Window> window;
};

/// {"family": "phi"|"psi", "params": {...},
///  "sweep": {"start": t0, "ratio": r, "count": k, "leading_zero": bool, "window": [x0, x1, y0, y1]}}
/// Throws Error(malformed_input).
SweepSpec sweep_from_json(const io::json& j);

std::vector<Complex> t_values(const SweepSpec& spec);

struct TrackedRoot {
  int id = 0;
  Root root;
  /// Nearest infinity-root prediction, for phi with m >= 2.
  std::optional<Complex> predicted;
};

struct Step {
  Complex t;
  bool ok = false;
  std::string error;
  int rho = 0;
  int beta = 0;
  bool winding_certified = false;
  std::vector<TrackedRoot> roots;
};

/// Solves every step. Root ids follow nearest-neighbour matching against the
/// last successful step, never across opposite signs. A failing step is
/// recorded with its message and skipped.
std::vector<Step> run_sweep(const SweepSpec& spec);

/// kind,step,t_re,t_im,id,re,im,sign,rho,beta,predicted_re,predicted_im,message
std::string to_csv(const std::vector<Step>& steps);

}  // namespace mixroots::sweep
