#include "logistic/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "logistic/continuous.hpp"
#include "logistic/errors.hpp"
#include "logistic/riccati_map.hpp"
#include "logistic/standard_map.hpp"

namespace logistic::cli {
namespace {

using output::Artifact;
using output::make_series;
using nlohmann::json;

// Shortest representation that round-trips, so 0.14 stays "0.14".
std::string gamma_key(double g) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), g);
  return "gamma=" + std::string(buf.data(), res.ptr);
}

double finite(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  if (!std::isfinite(*v)) {
    throw ConfigError(std::string(flag) + " must be a finite number");
  }
  return *v;
}

template <typename T>
T value_or(const std::optional<T>& v, T fallback) {
  return v ? *v : fallback;
}

std::vector<standard_map::ClosedFormVariant> variants(
    const std::vector<std::string>& forms) {
  std::vector<standard_map::ClosedFormVariant> out;
  for (const auto& f : forms) {
    const auto v = standard_map::parse_variant(f);
    if (!v) throw UsageError("unknown --form '" + f + "'");
    out.push_back(*v);
  }
  return out;
}

void check_gammas(const std::vector<double>& gammas) {
  for (double g : gammas) {
    if (!std::isfinite(g) || g == 0.0) {
      throw ConfigError("--gamma values must be finite and nonzero");
    }
  }
}

Artifact ode_artifact(double r, double x0, const std::vector<double>& gammas,
                      double t_end, double dt, std::ostream& err) {
  using namespace continuous;
  check_gammas(gammas);
  const ContinuousParams p{r, x0};
  Artifact a;
  a.config = {{"subcommand", "ode"}, {"r", r},         {"x0", x0},
              {"gamma", gammas},     {"t_end", t_end}, {"dt", dt}};

  // rk4_oracle validates the grid; the closed forms reuse its sample times.
  Trajectory rk4 = rk4_oracle(p, t_end, dt);
  const auto policy = PrecisionPolicy::double_precision();

  Trajectory x1(Method::ode_closed_form, Axis::time, policy);
  for (const auto& s : rk4.samples()) {
    x1.append(s.at, particular_solution(s.at, p));
  }
  a.series.push_back(make_series("x1", std::move(x1)));

  for (double g : gammas) {
    const RiccatiShift shift{g};
    if (gamma_status(p, shift) == GammaStatus::outside_range) {
      err << "warning: " << gamma_key(g)
          << " is outside the bounded range gamma > x0/(1-x0)\n";
    }
    Trajectory xg(Method::ode_closed_form, Axis::time, policy);
    for (const auto& s : rk4.samples()) {
      xg.append(s.at, general_solution(s.at, p, shift));
    }
    a.series.push_back(make_series(gamma_key(g), std::move(xg)));
  }
  a.series.push_back(make_series("rk4", std::move(rk4)));
  return a;
}

Artifact map3_artifact(double r, double x0, std::uint64_t steps, unsigned bits,
                       const std::vector<std::string>& forms) {
  using namespace standard_map;
  const MapParams p{r, x0};
  const auto policy = PrecisionPolicy::with_bits(bits);
  Artifact a;
  a.config = {{"subcommand", "map3"}, {"r", r},       {"x0", x0},
              {"steps", steps},       {"bits", bits}, {"form", forms}};
  a.series.push_back(make_series("iterate", iterate(p, steps, policy)));
  for (auto v : variants(forms)) {
    a.series.push_back(make_series(std::string(to_string(v)),
                                   closed_form_trajectory(p, steps, v, policy)));
  }
  return a;
}

Artifact map4_artifact(double r, double x0, std::uint64_t steps,
                       const std::vector<double>& gammas) {
  using namespace riccati_map;
  check_gammas(gammas);
  const RiccatiMapParams p{r, x0};
  Artifact a;
  a.config = {{"subcommand", "map4"}, {"r", r},         {"x0", x0},
              {"steps", steps},       {"gamma", gammas}};
  a.series.push_back(make_series("iterate", iterate(p, steps)));
  a.series.push_back(make_series("x1", particular_trajectory(p, steps)));
  for (double g : gammas) {
    a.series.push_back(make_series(gamma_key(g), general_trajectory(p, g, steps)));
  }
  return a;
}

Artifact compare_artifact(double r, double x0, std::uint64_t steps,
                          unsigned bits, double threshold,
                          const std::vector<std::string>& forms) {
  using namespace standard_map;
  if (forms.empty()) throw UsageError("compare needs at least one --form");
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw ConfigError("--threshold must be positive");
  }
  PrecisionPolicy::with_bits(bits).validate();
  const MapParams p{r, x0};
  Artifact a;
  a.config = {{"subcommand", "compare"}, {"r", r},
              {"x0", x0},                {"steps", steps},
              {"bits", bits},            {"threshold", threshold},
              {"form", forms},           {"oracle_bits", oracle_bits_for(steps, bits)}};
  for (auto v : variants(forms)) {
    a.reports.push_back({std::string(to_string(v)),
                         divergence_analysis(p, v, steps, bits, threshold)});
  }
  a.reports.push_back(
      {"iterate", iteration_divergence(p, steps, bits, threshold)});
  return a;
}

Artifact figure_artifact(int figure, std::ostream& err) {
  switch (figure) {
    case 1: {
      Artifact a = ode_artifact(presets::kFigure1R, presets::kFigure1X0,
                                presets::kFigure1Gammas, presets::kFigure1TEnd,
                                presets::kFigure1Dt, err);
      // The figure shows the closed forms only.
      a.series.pop_back();
      a.config["subcommand"] = "figure";
      a.config["figure"] = 1;
      return a;
    }
    case 2: {
      using namespace standard_map;
      const MapParams p{presets::kFigure2R, presets::kFigure2X0};
      const auto steps = presets::kFigure2Steps;
      const auto bits = presets::kFigure2Bits;
      const auto threshold = presets::kFigure2Threshold;
      const auto working = PrecisionPolicy::with_bits(bits);
      const unsigned oracle = oracle_bits_for(steps, bits);
      Artifact a = compare_artifact(p.r, p.x0, steps, bits, threshold,
                                    {"table1", "simple"});
      a.config["subcommand"] = "figure";
      a.config["figure"] = 2;
      a.series.push_back(make_series("iterate", iterate(p, steps, working)));
      a.series.push_back(make_series(
          "table1",
          closed_form_trajectory(p, steps, ClosedFormVariant::rm2_table1, working)));
      a.series.push_back(make_series(
          "simple",
          closed_form_trajectory(p, steps, ClosedFormVariant::rm2_simple, working)));
      a.series.push_back(make_series(
          "oracle", "oracle",
          iterate(p, steps, PrecisionPolicy::with_bits(oracle))));
      return a;
    }
    case 3: {
      Artifact a = map4_artifact(presets::kFigure3R, presets::kFigure3X0,
                                 presets::kFigure3Steps, presets::kFigure3Gammas);
      a.config["subcommand"] = "figure";
      a.config["figure"] = 3;
      return a;
    }
    default:
      throw UsageError("figure must be 1, 2 or 3");
  }
}

Artifact rng_artifact(double x0, std::uint64_t count, std::uint64_t burn_in) {
  const auto bits = standard_map::prng_bits(x0, count, burn_in);
  Trajectory t(Method::iterated, Axis::index, PrecisionPolicy::double_precision());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    t.append(static_cast<double>(i), static_cast<double>(bits[i]));
  }
  Artifact a;
  a.config = {{"subcommand", "rng"}, {"x0", x0}, {"count", count},
              {"burn_in", burn_in}};
  a.series.push_back(make_series("bits", "prng-r4", std::move(t)));
  return a;
}

void add_io_flags(CLI::App* sub, RunConfig& c) {
  static const std::map<std::string, OutputFormat> kFormats = {
      {"csv", OutputFormat::csv},
      {"json", OutputFormat::json},
      {"svg", OutputFormat::svg}};
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats));
  sub->add_option("--out", c.output_path, "Output file (default: stdout)");
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& out) {
  RunConfig c;
  CLI::App app{"Exact solutions of the logistic equation and logistic maps",
               "logistic"};
  app.require_subcommand(1, 1);

  auto* ode = app.add_subcommand("ode", "Logistic ODE: closed forms and RK4");
  ode->add_option("--r", c.r, "Growth rate")->required();
  ode->add_option("--x0", c.x0, "Initial value x(0)")->required();
  ode->add_option("--gamma", c.gammas, "Riccati shift (repeatable)");
  ode->add_option("--t-end", c.t_end, "Final time (default 10)");
  ode->add_option("--dt", c.dt, "Sample spacing and RK4 step (default 0.01)");
  add_io_flags(ode, c);

  auto* map3 = app.add_subcommand("map3", "Iterate x' = r x (1 - x)");
  map3->add_option("--r", c.r, "Map parameter")->required();
  map3->add_option("--x0", c.x0, "Seed")->required();
  map3->add_option("--steps", c.steps, "Number of steps (default 20)");
  map3->add_option("--bits", c.bits, "Significand bits (default 53)");
  map3->add_option("--form", c.forms, "Closed form to add (repeatable)")
      ->check(CLI::IsMember({"table1", "simple", "r2", "r4"}));
  add_io_flags(map3, c);

  auto* map4 = app.add_subcommand("map4", "Iterate x' - x = r x (1 - x')");
  map4->add_option("--r", c.r, "Map parameter")->required();
  map4->add_option("--x0", c.x0, "Seed")->required();
  map4->add_option("--steps", c.steps, "Number of steps (default 50)");
  map4->add_option("--gamma", c.gammas, "Riccati shift (repeatable)");
  add_io_flags(map4, c);

  auto* compare =
      app.add_subcommand("compare", "Closed forms and iteration vs oracle");
  compare->add_option("--r", c.r, "Map parameter")->required();
  compare->add_option("--x0", c.x0, "Seed")->required();
  compare->add_option("--form", c.forms, "Closed form (repeatable)")
      ->required()
      ->check(CLI::IsMember({"table1", "simple", "r2", "r4"}));
  compare->add_option("--steps", c.steps, "Number of steps (default 60)");
  compare->add_option("--bits", c.bits, "Working precision (default 53)");
  compare->add_option("--threshold", c.threshold, "Divergence threshold (default 0.01)");
  add_io_flags(compare, c);

  auto* figure = app.add_subcommand("figure", "Reproduce figure 1, 2 or 3");
  figure->add_option("number", c.figure, "Figure number")
      ->required()
      ->check(CLI::Range(1, 3));
  add_io_flags(figure, c);

  auto* rng = app.add_subcommand("rng", "Bits from the r = 4 map");
  rng->add_option("--x0", c.x0, "Seed in (0, 1)")->required();
  rng->add_option("--count", c.count, "Number of bits (default 1000)");
  rng->add_option("--burn-in", c.burn_in, "Discarded steps (default 100)");
  add_io_flags(rng, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (ode->parsed()) c.subcommand = Subcommand::ode;
  if (map3->parsed()) c.subcommand = Subcommand::map3;
  if (map4->parsed()) c.subcommand = Subcommand::map4;
  if (compare->parsed()) c.subcommand = Subcommand::compare;
  if (figure->parsed()) c.subcommand = Subcommand::figure;
  if (rng->parsed()) c.subcommand = Subcommand::rng;
  return c;
}

output::Artifact build_artifact(const RunConfig& c, std::ostream& err) {
  switch (c.subcommand) {
    case Subcommand::ode:
      return ode_artifact(finite(c.r, "--r"), finite(c.x0, "--x0"), c.gammas,
                          finite(c.t_end.value_or(10.0), "--t-end"),
                          finite(c.dt.value_or(0.01), "--dt"), err);
    case Subcommand::map3: {
      const unsigned bits = value_or(c.bits, kDoubleBits);
      PrecisionPolicy::with_bits(bits).validate();
      return map3_artifact(finite(c.r, "--r"), finite(c.x0, "--x0"),
                           value_or<std::uint64_t>(c.steps, 20), bits, c.forms);
    }
    case Subcommand::map4:
      return map4_artifact(finite(c.r, "--r"), finite(c.x0, "--x0"),
                           value_or<std::uint64_t>(c.steps, 50), c.gammas);
    case Subcommand::compare:
      return compare_artifact(finite(c.r, "--r"), finite(c.x0, "--x0"),
                              value_or<std::uint64_t>(c.steps, 60),
                              value_or(c.bits, kDoubleBits),
                              finite(c.threshold.value_or(0.01), "--threshold"),
                              c.forms);
    case Subcommand::figure:
      return figure_artifact(c.figure, err);
    case Subcommand::rng:
      return rng_artifact(finite(c.x0, "--x0"),
                          value_or<std::uint64_t>(c.count, 1000),
                          value_or<std::uint64_t>(c.burn_in, 100));
  }
  throw UsageError("unknown subcommand");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Artifact artifact = build_artifact(config, err);
    std::ostringstream buffer;
    switch (config.format) {
      case OutputFormat::csv: output::write_csv(artifact, buffer); break;
      case OutputFormat::json: output::write_json(artifact, buffer); break;
      case OutputFormat::svg: output::write_svg(artifact, buffer); break;
    }
    if (config.output_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output_path, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        err << "error: cannot write " << config.output_path << '\n';
        return kExitUsage;
      }
    }
    return kExitOk;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace logistic::cli
