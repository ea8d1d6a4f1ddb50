#pragma once

#include <string>
#include <vector>

#include "mixroots/solver.hpp"

namespace mixroots::plot {

struct PlotSpec {
  Window window{-1.2, 1.2, -1.2, 1.2};
  int samples = 600;  // lattice nodes per axis
  bool show_roots = false;
};

/// Throws Error(invalid_argument) unless x0 < x1, y0 < y1 and samples >= 16.
void validate(const PlotSpec& spec);

struct Segment {
  Complex a;
  Complex b;
};

/// Zero sets of g = Re f and h = Im f as marching-squares segments.
struct ZeroCurves {
  std::vector<Segment> re;
  std::vector<Segment> im;
  double cell_width = 0.0;
  double cell_height = 0.0;
};

/// Samples f on the lattice and runs marching squares with linear
/// interpolation along cell edges. Saddle cells are split according to the
/// sign at the cell centre.
ZeroCurves zero_curves(const MixedPolynomial& f, const PlotSpec& spec);

/// Crossing points of a green and a red segment, merged when closer than one
/// cell diagonal.
std::vector<Complex> curve_intersections(const ZeroCurves& curves);

/// Deterministic SVG: green Re f = 0, red Im f = 0, filled circles for
/// positive roots and hollow ones for negative (and degenerate) roots.
std::string render_svg(const ZeroCurves& curves, const PlotSpec& spec, const std::vector<Root>& roots);

}  // namespace mixroots::plot
