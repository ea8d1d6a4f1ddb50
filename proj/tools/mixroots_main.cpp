// mixroots: solve, sweep, verify and plot mixed polynomials.
//
// Exit codes: 0 success, 1 degenerate roots or a failed verification,
// 2 non-isolated zero set, 3 malformed input, 4 solver failure.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mixroots/classify.hpp"
#include "mixroots/error.hpp"
#include "mixroots/solver.hpp"
#include "mixroots_tools/io.hpp"
#include "mixroots_tools/plot.hpp"
#include "mixroots_tools/suites.hpp"
#include "mixroots_tools/sweep.hpp"

namespace {

using namespace mixroots;

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 1;
constexpr int kExitNonIsolated = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitSolverFailure = 4;

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::non_isolated: return kExitNonIsolated;
    case ErrorKind::malformed_input:
    case ErrorKind::invalid_argument:
    case ErrorKind::zero_polynomial: return kExitMalformed;
    default: return kExitSolverFailure;
  }
}

int report_error(const Error& e) {
  std::cerr << "mixroots: " << to_string(e.kind()) << ": " << e.what() << "\n";
  return exit_code(e);
}

int cmd_solve(const std::string& input, const std::string& csv_path, const std::string& json_path) {
  const MixedPolynomial f = io::load_polynomial(input);
  const RootReport report = solve_all(f);
  const ClassTag tag = classify_polynomial(f);
  if (!json_path.empty()) io::write_file(json_path, io::report_to_text(report, tag));
  if (!csv_path.empty()) io::write_file(csv_path, io::report_to_csv(report));
  std::cout << "rho=" << report.rho << " beta=" << report.beta << " class=" << tag.to_string() << "\n";
  if (!report.winding_certified) std::cerr << "mixroots: winding certification did not confirm beta\n";
  if (report.degenerate_found) {
    std::cerr << "mixroots: degenerate roots present; rho and beta are unreliable\n";
    return kExitDegenerate;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& input, const std::string& out_path) {
  io::json j;
  try {
    j = io::json::parse(io::read_file(input));
  } catch (const io::json::exception& e) {
    throw Error(ErrorKind::malformed_input, std::string("invalid JSON: ") + e.what());
  }
  const auto steps = sweep::run_sweep(sweep::sweep_from_json(j));
  io::write_file(out_path, sweep::to_csv(steps));
  for (const auto& s : steps) {
    std::cout << "t=" << io::format15(s.t.real());
    if (s.t.imag() != 0.0) std::cout << (s.t.imag() < 0 ? "" : "+") << io::format15(s.t.imag()) << "i";
    if (s.ok) std::cout << " rho=" << s.rho << " beta=" << s.beta << "\n";
    else std::cout << " failed: " << s.error << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& report_path, const std::string& junit_path) {
  suites::SuiteResult result;
  if (suite == "report") {
    if (report_path.empty()) throw Error(ErrorKind::malformed_input, "suite \"report\" needs --report FILE");
    result = suites::verify_report(io::load_report(report_path), "report");
  } else {
    const auto names = suites::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::string known;
      for (const auto& n : names) known += " " + n;
      throw Error(ErrorKind::malformed_input, "unknown suite \"" + suite + "\"; known: report" + known);
    }
    result = suites::run_suite(suite);
  }
  for (const auto& c : result.cases) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  std::cout << result.name << ": " << result.cases.size() - result.failures() << "/" << result.cases.size()
            << " passed\n";
  if (!junit_path.empty()) io::write_file(junit_path, suites::to_junit(result));
  return result.passed() ? kExitOk : kExitDegenerate;
}

std::optional<Window> parse_window(const std::string& text) {
  Window w;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &w.x0, &w.x1, &w.y0, &w.y1, &tail) != 4) return std::nullopt;
  return w;
}

int cmd_plot(const std::string& input, const std::string& window, int samples, const std::string& out_path,
             bool show_roots) {
  const auto w = parse_window(window);
  if (!w) throw Error(ErrorKind::malformed_input, "window must be x0,x1,y0,y1");
  plot::PlotSpec spec{*w, samples, show_roots};
  try {
    plot::validate(spec);
  } catch (const Error& e) {
    throw Error(ErrorKind::malformed_input, e.what());
  }
  const MixedPolynomial f = io::load_polynomial(input);
  std::vector<Root> roots;
  int code = kExitOk;
  if (show_roots) {
    try {
      roots = solve_all(f).roots;
    } catch (const Error& e) {
      code = report_error(e);
    }
  }
  io::write_file(out_path, plot::render_svg(plot::zero_curves(f, spec), spec, roots));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roots of mixed polynomials f(z, zbar)"};
  app.require_subcommand(1);

  std::string input;
  std::string csv_path;
  std::string json_path;
  auto* solve = app.add_subcommand("solve", "Find, sign and count all roots");
  solve->add_option("input", input, "polynomial or family JSON")->required();
  solve->add_option("--csv", csv_path, "write the root table as CSV");
  solve->add_option("--json", json_path, "write the root report as JSON");

  std::string sweep_in;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Track roots of a phi/psi family across t");
  sweep->add_option("spec", sweep_in, "sweep spec JSON")->required();
  sweep->add_option("--out", sweep_out, "trajectory CSV")->required();

  std::string suite;
  std::string report_path;
  std::string junit_path;
  auto* verify = app.add_subcommand("verify", "Run a named check suite");
  verify->add_option("suite", suite, "paper-goldens, beta-random, oracle, bifurcation or report")->required();
  verify->add_option("--report", report_path, "report JSON checked by the \"report\" suite");
  verify->add_option("--junit", junit_path, "write JUnit XML");

  std::string plot_in;
  std::string window = "-1.2,1.2,-1.2,1.2";
  int samples = 600;
  std::string plot_out;
  bool show_roots = false;
  auto* plot_cmd = app.add_subcommand("plot", "Draw Re f = 0 and Im f = 0 as SVG");
  plot_cmd->add_option("input", plot_in, "polynomial or family JSON")->required();
  plot_cmd->add_option("--window", window, "x0,x1,y0,y1");
  plot_cmd->add_option("--samples", samples, "lattice nodes per axis");
  plot_cmd->add_option("--out", plot_out, "SVG output")->required();
  plot_cmd->add_flag("--roots", show_roots, "mark the roots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*solve) return cmd_solve(input, csv_path, json_path);
    if (*sweep) return cmd_sweep(sweep_in, sweep_out);
    if (*verify) return cmd_verify(suite, report_path, junit_path);
    if (*plot_cmd) return cmd_plot(plot_in, window, samples, plot_out, show_roots);
  } catch (const Error& e) {
    return report_error(e);
  }
  return kExitOk;
}
