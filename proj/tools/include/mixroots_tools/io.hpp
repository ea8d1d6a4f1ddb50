#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mixroots/classify.hpp"
#include "mixroots/families.hpp"
#include "mixroots/solver.hpp"

namespace mixroots::io {

using nlohmann::json;

/// x rounded to 15 significant digits; printing the result with "%.15g"
/// reproduces the same text, so written files survive a read/write cycle.
double round15(double x);
std::string format15(double x);

/// Complex value from a JSON number or a [re, im] pair.
Complex complex_from_json(const json& j);

/// Either {"terms": [...]} or a family spec {"family": ..., "params": {...}}.
/// Throws Error(malformed_input) on any schema violation.
MixedPolynomial polynomial_from_json(const json& j);
MixedPolynomial parse_polynomial(std::string_view text);
MixedPolynomial load_polynomial(const std::filesystem::path& path);

/// Bifurcation data of a "phi"/"psi" family spec. A missing params.t means
/// t = 1e-3 |gamma|.
BifurcationSpec bifurcation_from_json(const json& j);

json terms_to_json(const MixedPolynomial& f);

struct ReportFile {
  RootReport report;
  ClassTag tag;
};

json report_to_json(const RootReport& report, const ClassTag& tag);
std::string report_to_text(const RootReport& report, const ClassTag& tag);
ReportFile parse_report(std::string_view text);
ReportFile load_report(const std::filesystem::path& path);

/// re,im,sign,jacobian,residual with a header row.
std::string report_to_csv(const RootReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace mixroots::io
