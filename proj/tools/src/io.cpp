#include "mixroots_tools/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "mixroots/error.hpp"

namespace mixroots::io {

std::string format15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format15(x).c_str(), nullptr);
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Complex> complex_list(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<Complex> out;
  for (const json& v : j) out.push_back(complex_from_json(v));
  return out;
}

MixedPolynomial terms_from_json(const json& j) {
  const json& terms = member(j, "terms");
  if (!terms.is_array()) malformed("\"terms\" must be an array");
  MixedPolynomial::TermMap map;
  for (const json& t : terms) {
    const int zn = integer(member(t, "zn"), "zn");
    const int zb = integer(member(t, "zb"), "zb");
    if (zn < 0 || zb < 0) malformed("exponents must be nonnegative");
    const double re = t.contains("re") ? number(t.at("re"), "re") : 0.0;
    const double im = t.contains("im") ? number(t.at("im"), "im") : 0.0;
    if (!map.emplace(Exponent{zn, zb}, Complex(re, im)).second) {
      malformed("duplicate exponent pair (" + std::to_string(zn) + ", " + std::to_string(zb) + ")");
    }
  }
  try {
    return MixedPolynomial(std::move(map));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

json params_of(const json& j) {
  if (!j.contains("params")) return json::object();
  const json& p = j.at("params");
  if (!p.is_object()) malformed("\"params\" must be an object");
  return p;
}

MixedPolynomial family_from_json(const json& j) {
  const json& name_j = member(j, "family");
  if (!name_j.is_string()) malformed("\"family\" must be a string");
  const std::string name = name_j.get<std::string>();
  const json params = params_of(j);
  try {
    if (name == "rhie3") return rhie3();
    if (name == "example") return example_f();
    if (name == "lens") {
      return lens_numerator({complex_list(member(params, "masses"), "masses"),
                             complex_list(member(params, "positions"), "positions")});
    }
    if (name == "power") {
      return power_lens(integer(member(params, "n"), "n"), integer(member(params, "m"), "m"));
    }
    if (name == "rhie_family") {
      return rhie_family(integer(member(params, "n"), "n"), number(member(params, "epsilon"), "epsilon"),
                         number(member(params, "a"), "a"));
    }
    if (name == "phi" || name == "psi") return bifurcate(bifurcation_from_json(j));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::malformed_input) throw;
    malformed(name + ": " + e.what());
  }
  malformed("unknown family \"" + name + "\"");
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  malformed("expected a number or a [re, im] pair");
}

BifurcationSpec bifurcation_from_json(const json& j) {
  const std::string name = member(j, "family").get<std::string>();
  const json params = params_of(j);
  BifurcationSpec spec;
  spec.variant = name == "psi" ? BifurcationVariant::psi : BifurcationVariant::phi;
  spec.base = params.contains("base") ? polynomial_from_json(params.at("base")) : rhie3();
  spec.m = integer(member(params, "m"), "m");
  if (params.contains("t")) {
    spec.t = complex_from_json(params.at("t"));
  } else {
    try {
      spec.t = 1e-3 * std::abs(split_lens(spec.base).gamma);
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  return spec;
}

MixedPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) malformed("polynomial input must be a JSON object");
  if (j.contains("terms")) return terms_from_json(j);
  if (j.contains("family")) return family_from_json(j);
  malformed("expected \"terms\" or \"family\"");
}

MixedPolynomial parse_polynomial(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return polynomial_from_json(j);
}

MixedPolynomial load_polynomial(const std::filesystem::path& path) { return parse_polynomial(read_file(path)); }

json terms_to_json(const MixedPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, a] : f.terms()) {
    terms.push_back({{"zn", e.zn}, {"zb", e.zb}, {"re", round15(a.real())}, {"im", round15(a.imag())}});
  }
  return {{"terms", terms}};
}

json report_to_json(const RootReport& report, const ClassTag& tag) {
  json roots = json::array();
  for (const Root& r : report.roots) {
    roots.push_back({{"re", round15(r.location.real())},
                     {"im", round15(r.location.imag())},
                     {"sign", sign_symbol(r.sign)},
                     {"jacobian", round15(r.jacobian)},
                     {"residual", round15(r.residual)}});
  }
  json j;
  j["rho"] = report.rho;
  j["beta"] = report.beta;
  j["winding_certified"] = report.winding_certified;
  j["degenerate_found"] = report.degenerate_found;
  j["winding"] = report.winding ? json(*report.winding) : json(nullptr);
  j["certification_radius"] = round15(report.certification_radius);
  j["class"] = {{"class", to_string(tag.cls)}, {"n", tag.n}, {"m", tag.m}};
  j["polynomial"] = terms_to_json(report.polynomial);
  j["roots"] = roots;
  return j;
}

std::string report_to_text(const RootReport& report, const ClassTag& tag) {
  return report_to_json(report, tag).dump(2) + "\n";
}

namespace {

RootSign sign_from_symbol(const json& j) {
  if (!j.is_string()) malformed("root sign must be a string");
  const std::string s = j.get<std::string>();
  if (s == "+") return RootSign::positive;
  if (s == "-") return RootSign::negative;
  if (s == "0") return RootSign::degenerate;
  malformed("root sign must be one of \"+\", \"-\", \"0\"");
}

PolynomialClass class_from_name(const json& j) {
  if (!j.is_string()) malformed("class must be a string");
  const std::string s = j.get<std::string>();
  for (PolynomialClass c : {PolynomialClass::L, PolynomialClass::Lhs, PolynomialClass::M, PolynomialClass::other}) {
    if (s == to_string(c)) return c;
  }
  malformed("unknown class \"" + s + "\"");
}

bool boolean(const json& j, const char* what) {
  if (!j.is_boolean()) malformed(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

}  // namespace

ReportFile parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  ReportFile out;
  RootReport& r = out.report;
  r.polynomial = terms_from_json(member(j, "polynomial"));
  r.rho = integer(member(j, "rho"), "rho");
  r.beta = integer(member(j, "beta"), "beta");
  r.winding_certified = boolean(member(j, "winding_certified"), "winding_certified");
  r.degenerate_found = j.contains("degenerate_found") && boolean(j.at("degenerate_found"), "degenerate_found");
  if (j.contains("winding") && !j.at("winding").is_null()) r.winding = integer(j.at("winding"), "winding");
  if (j.contains("certification_radius")) r.certification_radius = number(j.at("certification_radius"), "radius");
  const json& roots = member(j, "roots");
  if (!roots.is_array()) malformed("\"roots\" must be an array");
  for (const json& x : roots) {
    Root root;
    root.location = {number(member(x, "re"), "re"), number(member(x, "im"), "im")};
    root.sign = sign_from_symbol(member(x, "sign"));
    root.jacobian = number(member(x, "jacobian"), "jacobian");
    root.residual = number(member(x, "residual"), "residual");
    r.roots.push_back(root);
  }
  if (j.contains("class")) {
    const json& c = j.at("class");
    out.tag = {class_from_name(member(c, "class")), integer(member(c, "n"), "n"), integer(member(c, "m"), "m")};
  } else {
    out.tag = classify_polynomial(r.polynomial);
  }
  return out;
}

ReportFile load_report(const std::filesystem::path& path) { return parse_report(read_file(path)); }

std::string report_to_csv(const RootReport& report) {
  std::ostringstream out;
  out << "re,im,sign,jacobian,residual\n";
  for (const Root& r : report.roots) {
    out << format15(r.location.real()) << ',' << format15(r.location.imag()) << ',' << sign_symbol(r.sign) << ','
        << format15(r.jacobian) << ',' << format15(r.residual) << '\n';
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::invalid_argument, "write failed: " + path.string());
}

}  // namespace mixroots::io
