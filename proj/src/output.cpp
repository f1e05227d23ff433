#include "logistic/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace logistic::output {
namespace {

std::string g17(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

std::string short_number(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.4g", v);
  return buf.data();
}

std::string fixed2(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", v);
  return buf.data();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Reports are drawn and tabulated like series of per-step errors.
std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>
plottable(const Artifact& a) {
  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>
      out;
  for (const auto& s : a.series) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& sample : s.trajectory.samples()) {
      pts.emplace_back(sample.at, sample.value.to_double());
    }
    out.emplace_back(s.name, std::move(pts));
  }
  for (const auto& r : a.reports) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < r.report.per_step_abs_error.size(); ++i) {
      pts.emplace_back(static_cast<double>(i), r.report.per_step_abs_error[i]);
    }
    out.emplace_back(r.name + " abs error", std::move(pts));
  }
  return out;
}

}  // namespace

Series make_series(std::string name, Trajectory t) {
  std::string method(to_string(t.method()));
  return {std::move(name), std::move(method), std::move(t)};
}

Series make_series(std::string name, std::string method, Trajectory t) {
  return {std::move(name), std::move(method), std::move(t)};
}

std::string format_value(const BigFloat& v) {
  if (v.precision() <= kDoubleBits) return g17(v.to_double());
  return v.to_string(0);
}

std::string format_abscissa(double at, Axis axis) {
  if (axis == Axis::index) {
    return std::to_string(static_cast<unsigned long long>(at));
  }
  return g17(at);
}

void write_csv(const Artifact& a, std::ostream& os) {
  os << "index_or_time,series,method,value\n";
  for (const auto& s : a.series) {
    for (const auto& sample : s.trajectory.samples()) {
      os << format_abscissa(sample.at, s.trajectory.axis()) << ',' << s.name
         << ',' << s.method << ',' << format_value(sample.value) << '\n';
    }
  }
  for (const auto& r : a.reports) {
    const auto& errs = r.report.per_step_abs_error;
    for (std::size_t i = 0; i < errs.size(); ++i) {
      os << i << ',' << r.name << ",abs-error," << g17(errs[i]) << '\n';
    }
  }
}

nlohmann::json to_json(const DivergenceReport& r) {
  nlohmann::json j;
  j["per_step_abs_error"] = r.per_step_abs_error;
  j["first_divergent_index"] =
      r.first_divergent_index ? nlohmann::json(*r.first_divergent_index)
                              : nlohmann::json(nullptr);
  j["threshold"] = r.threshold;
  j["max_error"] = r.max_error;
  return j;
}

void write_json(const Artifact& a, std::ostream& os) {
  nlohmann::json doc;
  doc["config"] = a.config;
  doc["series"] = nlohmann::json::array();
  for (const auto& s : a.series) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& sample : s.trajectory.samples()) {
      points.push_back({{"at", sample.at}, {"value", format_value(sample.value)}});
    }
    doc["series"].push_back(
        {{"name", s.name},
         {"method", s.method},
         {"axis", s.trajectory.axis() == Axis::index ? "index" : "time"},
         {"precision_bits", s.trajectory.precision().significand_bits},
         {"points", std::move(points)}});
  }
  doc["reports"] = nlohmann::json::array();
  for (const auto& r : a.reports) {
    nlohmann::json j = to_json(r.report);
    j["name"] = r.name;
    doc["reports"].push_back(std::move(j));
  }
  os << doc.dump(2) << '\n';
}

void write_svg(const Artifact& a, std::ostream& os) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 200, kTop = 20, kBottom = 50;
  static constexpr std::array<const char*, 8> kColors = {
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
      "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  const auto data = plottable(a);
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& [name, pts] : data) {
    for (const auto& [x, y] : pts) {
      if (!std::isfinite(y)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!(x_lo <= x_hi)) x_lo = 0, x_hi = 1;
  if (!(y_lo <= y_hi)) y_lo = 0, y_hi = 1;
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_lo -= 0.5, y_hi += 0.5;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  const auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
     << kLeft + plot_w << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
     << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x_lo + (x_hi - x_lo) * i / 4.0;
    const double fy = y_lo + (y_hi - y_lo) * i / 4.0;
    os << "<text x=\"" << fixed2(px(fx)) << "\" y=\"" << kTop + plot_h + 18
       << "\" text-anchor=\"middle\">" << short_number(fx) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed2(py(fy) + 4)
       << "\" text-anchor=\"end\">" << short_number(fy) << "</text>\n";
  }

  for (std::size_t k = 0; k < data.size(); ++k) {
    const char* color = kColors[k % kColors.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    bool first = true;
    for (const auto& [x, y] : data[k].second) {
      if (!std::isfinite(y)) continue;
      if (!first) os << ' ';
      os << fixed2(px(x)) << ',' << fixed2(py(y));
      first = false;
    }
    os << "\"/>\n";
    const double ly = kTop + 14 + 18.0 * static_cast<double>(k);
    os << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly - 4
       << "\" x2=\"" << kWidth - kRight + 30 << "\" y2=\"" << ly - 4
       << "\" stroke=\"" << color << "\"/>\n";
    os << "<text x=\"" << kWidth - kRight + 36 << "\" y=\"" << ly << "\">"
       << xml_escape(data[k].first) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace logistic::output
