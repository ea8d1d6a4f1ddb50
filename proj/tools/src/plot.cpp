#include "mixroots_tools/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixroots/error.hpp"
#include "mixroots_tools/io.hpp"

namespace mixroots::plot {

void validate(const PlotSpec& spec) {
  const Window& w = spec.window;
  if (!(std::isfinite(w.x0) && std::isfinite(w.x1) && std::isfinite(w.y0) && std::isfinite(w.y1))) {
    throw Error(ErrorKind::invalid_argument, "window bounds must be finite");
  }
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw Error(ErrorKind::invalid_argument, "degenerate window");
  if (spec.samples < 16) throw Error(ErrorKind::invalid_argument, "samples must be at least 16");
}

namespace {

struct Lattice {
  const PlotSpec& spec;
  double dx;
  double dy;

  double x(int i) const { return spec.window.x0 + dx * i; }
  double y(int j) const { return spec.window.y0 + dy * j; }
};

// Zero of the linear interpolant between a (value va) and b (value vb).
Complex crossing(Complex a, Complex b, double va, double vb) {
  const double s = va / (va - vb);
  return a + s * (b - a);
}

// One field (g or h) through one cell. Corners counter-clockwise from the
// bottom-left: c[0] = (i, j), c[1] = (i+1, j), c[2] = (i+1, j+1), c[3] = (i, j+1).
void march_cell(const Complex (&c)[4], const double (&v)[4], double centre, std::vector<Segment>& out) {
  bool pos[4];
  for (int k = 0; k < 4; ++k) pos[k] = v[k] > 0.0;
  // Edge k joins corner k and corner k+1.
  Complex p[4];
  bool cut[4];
  int cuts = 0;
  for (int k = 0; k < 4; ++k) {
    const int l = (k + 1) % 4;
    cut[k] = pos[k] != pos[l];
    if (cut[k]) {
      p[k] = crossing(c[k], c[l], v[k], v[l]);
      ++cuts;
    }
  }
  if (cuts == 2) {
    int e[2];
    int n = 0;
    for (int k = 0; k < 4; ++k) {
      if (cut[k]) e[n++] = k;
    }
    out.push_back({p[e[0]], p[e[1]]});
  } else if (cuts == 4) {
    // Saddle: if the centre shares the sign of corners 0 and 2, that sign
    // connects across the cell and corners 1 and 3 are cut off.
    if ((centre > 0.0) == pos[0]) {
      out.push_back({p[0], p[1]});
      out.push_back({p[2], p[3]});
    } else {
      out.push_back({p[3], p[0]});
      out.push_back({p[1], p[2]});
    }
  }
}

// Intersection of segments s and t, inclusive of endpoints.
bool intersect(const Segment& s, const Segment& t, Complex& at) {
  const Complex r = s.b - s.a;
  const Complex q = t.b - t.a;
  const double denom = r.real() * q.imag() - r.imag() * q.real();
  if (denom == 0.0) return false;
  const Complex d = t.a - s.a;
  const double u = (d.real() * q.imag() - d.imag() * q.real()) / denom;
  const double w = (d.real() * r.imag() - d.imag() * r.real()) / denom;
  if (u < 0.0 || u > 1.0 || w < 0.0 || w > 1.0) return false;
  at = s.a + u * r;
  return true;
}

}  // namespace

ZeroCurves zero_curves(const MixedPolynomial& f, const PlotSpec& spec) {
  validate(spec);
  const int n = spec.samples;
  const Lattice lat{spec, (spec.window.x1 - spec.window.x0) / (n - 1), (spec.window.y1 - spec.window.y0) / (n - 1)};
  std::vector<Complex> value(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) value[j * n + i] = f(Complex(lat.x(i), lat.y(j)));
  }

  ZeroCurves curves;
  curves.cell_width = lat.dx;
  curves.cell_height = lat.dy;
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const Complex c[4] = {{lat.x(i), lat.y(j)}, {lat.x(i + 1), lat.y(j)}, {lat.x(i + 1), lat.y(j + 1)},
                            {lat.x(i), lat.y(j + 1)}};
      const Complex fv[4] = {value[j * n + i], value[j * n + i + 1], value[(j + 1) * n + i + 1],
                             value[(j + 1) * n + i]};
      const double g[4] = {fv[0].real(), fv[1].real(), fv[2].real(), fv[3].real()};
      const double h[4] = {fv[0].imag(), fv[1].imag(), fv[2].imag(), fv[3].imag()};
      // The centre is sampled only when a saddle needs it.
      auto saddle = [](const double (&v)[4]) {
        const bool p0 = v[0] > 0.0;
        return p0 == (v[2] > 0.0) && p0 != (v[1] > 0.0) && p0 != (v[3] > 0.0);
      };
      Complex centre{};
      if (saddle(g) || saddle(h)) centre = f(0.5 * (c[0] + c[2]));
      march_cell(c, g, centre.real(), curves.re);
      march_cell(c, h, centre.imag(), curves.im);
    }
  }
  return curves;
}

std::vector<Complex> curve_intersections(const ZeroCurves& curves) {
  // Segments are at most one cell long, so only nearby pairs can cross.
  const double merge = std::hypot(curves.cell_width, curves.cell_height);
  std::vector<Complex> hits;
  for (const Segment& s : curves.re) {
    for (const Segment& t : curves.im) {
      if (std::abs(0.5 * (s.a + s.b) - 0.5 * (t.a + t.b)) > 2.0 * merge) continue;
      Complex at;
      if (intersect(s, t, at)) hits.push_back(at);
    }
  }
  std::vector<Complex> merged;
  std::vector<int> weight;
  for (const Complex h : hits) {
    bool found = false;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (std::abs(merged[k] - h) <= merge) {
        merged[k] = (merged[k] * static_cast<double>(weight[k]) + h) / static_cast<double>(weight[k] + 1);
        ++weight[k];
        found = true;
        break;
      }
    }
    if (!found) {
      merged.push_back(h);
      weight.push_back(1);
    }
  }
  return merged;
}

namespace {

void write_path(std::ostringstream& out, const std::vector<Segment>& segs, const char* colour) {
  out << "<path fill=\"none\" stroke=\"" << colour
      << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" d=\"";
  for (const Segment& s : segs) {
    out << 'M' << io::format15(s.a.real()) << ' ' << io::format15(-s.a.imag()) << 'L' << io::format15(s.b.real())
        << ' ' << io::format15(-s.b.imag());
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_svg(const ZeroCurves& curves, const PlotSpec& spec, const std::vector<Root>& roots) {
  validate(spec);
  const Window& w = spec.window;
  const double width = w.x1 - w.x0;
  const double height = w.y1 - w.y0;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
      << static_cast<int>(std::lround(800.0 * height / width)) << "\" viewBox=\"" << io::format15(w.x0) << ' '
      << io::format15(-w.y1) << ' ' << io::format15(width) << ' ' << io::format15(height) << "\">\n";
  out << "<rect x=\"" << io::format15(w.x0) << "\" y=\"" << io::format15(-w.y1) << "\" width=\""
      << io::format15(width) << "\" height=\"" << io::format15(height) << "\" fill=\"white\"/>\n";
  write_path(out, curves.re, "green");
  write_path(out, curves.im, "red");
  if (spec.show_roots) {
    const double r = 0.008 * std::max(width, height);
    for (const Root& root : roots) {
      const Complex z = root.location;
      if (z.real() < w.x0 || z.real() > w.x1 || z.imag() < w.y0 || z.imag() > w.y1) continue;
      const bool filled = root.sign == RootSign::positive;
      out << "<circle cx=\"" << io::format15(z.real()) << "\" cy=\"" << io::format15(-z.imag()) << "\" r=\""
          << io::format15(r) << "\" fill=\"" << (filled ? "black" : "white")
          << "\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mixroots::plot
