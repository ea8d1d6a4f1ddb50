#include "mixroots_tools/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "mixroots/error.hpp"

namespace mixroots::sweep {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

}  // namespace

SweepSpec sweep_from_json(const io::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    malformed("sweep spec needs a \"family\" string");
  }
  const std::string name = j.at("family").get<std::string>();
  if (name != "phi" && name != "psi") malformed("sweep supports the \"phi\" and \"psi\" families only");
  SweepSpec spec;
  try {
    spec.family = io::bifurcation_from_json(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::malformed_input) throw;
    malformed(e.what());
  }
  if (j.contains("sweep")) {
    const io::json& s = j.at("sweep");
    if (!s.is_object()) malformed("\"sweep\" must be an object");
    if (s.contains("start")) spec.start = io::complex_from_json(s.at("start"));
    if (s.contains("ratio")) {
      if (!s.at("ratio").is_number()) malformed("\"ratio\" must be a number");
      spec.ratio = s.at("ratio").get<double>();
    }
    if (s.contains("count")) {
      if (!s.at("count").is_number_integer()) malformed("\"count\" must be an integer");
      spec.count = s.at("count").get<int>();
    }
    if (s.contains("leading_zero")) {
      if (!s.at("leading_zero").is_boolean()) malformed("\"leading_zero\" must be a boolean");
      spec.leading_zero = s.at("leading_zero").get<bool>();
    }
    if (s.contains("window")) {
      const io::json& w = s.at("window");
      if (!w.is_array() || w.size() != 4 || !std::all_of(w.begin(), w.end(), [](const io::json& v) { return v.is_number(); })) {
        malformed("\"window\" must be [x0, x1, y0, y1]");
      }
      spec.window = Window{w[0].get<double>(), w[1].get<double>(), w[2].get<double>(), w[3].get<double>()};
      if (!(spec.window->x0 < spec.window->x1) || !(spec.window->y0 < spec.window->y1)) malformed("degenerate window");
    }
  }
  if (spec.start == Complex{} || !std::isfinite(std::abs(spec.start))) malformed("sweep start must be nonzero");
  if (!(spec.ratio != 0.0) || !std::isfinite(spec.ratio)) malformed("sweep ratio must be finite and nonzero");
  if (spec.count < 1) malformed("sweep count must be at least 1");
  return spec;
}

std::vector<Complex> t_values(const SweepSpec& spec) {
  std::vector<Complex> ts;
  if (spec.leading_zero) ts.emplace_back();
  Complex t = spec.start;
  for (int k = 0; k < spec.count; ++k) {
    ts.push_back(t);
    t *= spec.ratio;
  }
  return ts;
}

namespace {

bool inside(const std::optional<Window>& w, Complex z) {
  return !w || (z.real() >= w->x0 && z.real() <= w->x1 && z.imag() >= w->y0 && z.imag() <= w->y1);
}

std::vector<Complex> predictions(const BifurcationSpec& family, Complex t) {
  if (family.variant != BifurcationVariant::phi || family.m < 2 || t == Complex{}) return {};
  return predict_infinity_roots(split_lens(family.base).gamma, family.m, t);
}

// Greedy nearest-neighbour matching on relative distance, same sign only.
void assign_ids(std::vector<TrackedRoot>& now, const std::vector<TrackedRoot>& before, int& next_id) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < now.size(); ++i) {
    for (std::size_t k = 0; k < before.size(); ++k) {
      if (now[i].root.sign != before[k].root.sign) continue;
      const Complex b = before[k].root.location;
      pairs.emplace_back(std::abs(now[i].root.location - b) / (1.0 + std::abs(b)), i, k);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> taken_now(now.size(), false);
  std::vector<bool> taken_before(before.size(), false);
  for (const auto& [d, i, k] : pairs) {
    if (taken_now[i] || taken_before[k]) continue;
    now[i].id = before[k].id;
    taken_now[i] = true;
    taken_before[k] = true;
  }
  for (std::size_t i = 0; i < now.size(); ++i) {
    if (!taken_now[i]) now[i].id = next_id++;
  }
}

}  // namespace

std::vector<Step> run_sweep(const SweepSpec& spec) {
  std::vector<Step> steps;
  std::vector<TrackedRoot> previous;
  int next_id = 0;
  for (const Complex t : t_values(spec)) {
    Step step;
    step.t = t;
    try {
      BifurcationSpec family = spec.family;
      family.t = t;
      const RootReport report = solve_all(bifurcate(family));
      const std::vector<Complex> predicted = predictions(spec.family, t);
      for (const Root& r : report.roots) {
        if (!inside(spec.window, r.location)) continue;
        TrackedRoot tracked{0, r, std::nullopt};
        for (const Complex p : predicted) {
          if (std::abs(r.location - p) <= 0.5 * std::abs(p)) tracked.predicted = p;
        }
        step.roots.push_back(tracked);
      }
      assign_ids(step.roots, previous, next_id);
      step.ok = true;
      step.rho = report.rho;
      step.beta = report.beta;
      step.winding_certified = report.winding_certified;
      previous = step.roots;
    } catch (const Error& e) {
      step.ok = false;
      step.error = e.what();
      step.roots.clear();
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string to_csv(const std::vector<Step>& steps) {
  using io::format15;
  std::ostringstream out;
  out << "kind,step,t_re,t_im,id,re,im,sign,rho,beta,predicted_re,predicted_im,message\n";
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const Step& step = steps[s];
    const std::string head = std::to_string(s) + ',' + format15(step.t.real()) + ',' + format15(step.t.imag()) + ',';
    if (!step.ok) {
      std::string msg = step.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out << "error," << head << ",,,,,,,," << msg << '\n';
      continue;
    }
    for (const TrackedRoot& r : step.roots) {
      out << "root," << head << r.id << ',' << format15(r.root.location.real()) << ','
          << format15(r.root.location.imag()) << ',' << sign_symbol(r.root.sign) << ",,,";
      if (r.predicted) out << format15(r.predicted->real()) << ',' << format15(r.predicted->imag());
      else out << ',';
      out << ",\n";
    }
    out << "summary," << head << ",,,," << step.rho << ',' << step.beta << ",,,"
        << (step.winding_certified ? "certified" : "uncertified") << '\n';
  }
  return out.str();
}

}  // namespace mixroots::sweep
