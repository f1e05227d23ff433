#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "logistic/precision.hpp"

namespace logistic::output {

/// A named trajectory as it appears in an emitted artifact.
struct Series {
  std::string name;
  std::string method;
  Trajectory trajectory;
};

struct NamedReport {
  std::string name;
  DivergenceReport report;
};

struct Artifact {
  nlohmann::json config = nlohmann::json::object();
  std::vector<Series> series;
  std::vector<NamedReport> reports;
};

Series make_series(std::string name, Trajectory t);
Series make_series(std::string name, std::string method, Trajectory t);

/// 17 significant digits for double-width values, enough digits to
/// round-trip otherwise.
std::string format_value(const BigFloat& v);
std::string format_abscissa(double at, Axis axis);

/// Header `index_or_time,series,method,value`, one row per sample. Reports
/// contribute their per-step errors as rows with method `abs-error`.
void write_csv(const Artifact& a, std::ostream& os);
/// `{config, series, reports}`; sample values are decimal strings.
void write_json(const Artifact& a, std::ostream& os);
/// Minimal line chart: axes, one polyline per series, legend.
void write_svg(const Artifact& a, std::ostream& os);

nlohmann::json to_json(const DivergenceReport& r);

}  // namespace logistic::output
