#include "logistic/precision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logistic/errors.hpp"

namespace logistic {

void PrecisionPolicy::validate() const {
  if (significand_bits < kDoubleBits) {
    throw ConfigError("significand_bits must be >= 53, got " +
                      std::to_string(significand_bits));
  }
  if (baseline_bits < 1) {
    throw ConfigError("baseline_bits must be >= 1");
  }
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::iterated: return "iterated";
    case Method::closed_form_r2: return "closed-form-r2";
    case Method::closed_form_r4: return "closed-form-r4";
    case Method::closed_form_rm2_table1: return "closed-form-rm2-table1";
    case Method::closed_form_rm2_simple: return "closed-form-rm2-simple";
    case Method::conjugacy: return "conjugacy";
    case Method::oracle: return "oracle";
    case Method::ode_closed_form: return "ode-closed-form";
    case Method::ode_rk4: return "ode-rk4";
    case Method::riccati_particular: return "riccati-particular";
    case Method::riccati_general: return "riccati-general";
  }
  return "unknown";
}

Trajectory::Trajectory(Method method, Axis axis, PrecisionPolicy precision)
    : method_(method), axis_(axis), precision_(precision) {
  precision_.validate();
}

void Trajectory::append(double at, BigFloat value) {
  if (!std::isfinite(at)) {
    throw StructuralError("non-finite sample abscissa");
  }
  if (!samples_.empty() && !(at > samples_.back().at)) {
    throw StructuralError("sample abscissae must be strictly increasing");
  }
  if (!value.is_finite()) {
    throw DomainError("non-finite value at " + std::to_string(at));
  }
  if (value.precision() != precision_.significand_bits) {
    value = value.rounded_to(precision_.significand_bits);
  }
  samples_.push_back({at, std::move(value)});
}

void Trajectory::append(double at, double value) {
  append(at, BigFloat(value, precision_.significand_bits));
}

std::vector<double> Trajectory::values_as_double() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.value.to_double());
  return out;
}

unsigned precision_budget(std::uint64_t n_steps, double bits_lost_per_step,
                          const PrecisionPolicy& policy) {
  policy.validate();
  if (!(bits_lost_per_step >= 0.0) || !std::isfinite(bits_lost_per_step)) {
    throw ConfigError("bits_lost_per_step must be finite and non-negative");
  }
  const double lost =
      std::ceil(static_cast<double>(n_steps) * bits_lost_per_step);
  const double total = lost + static_cast<double>(policy.baseline_bits);
  if (total > 1'000'000.0) {
    throw ConfigError("precision budget exceeds 1e6 bits");
  }
  return std::max(kDoubleBits, static_cast<unsigned>(total));
}

unsigned default_oracle_bits(std::uint64_t n_steps) {
  return precision_budget(n_steps, 1.0, PrecisionPolicy{});
}

BigFloat reduce_mod_2pi(const BigFloat& angle) {
  if (!angle.is_finite()) {
    throw DomainError("cannot reduce a non-finite angle");
  }
  const unsigned bits = angle.precision();
  if (angle.is_zero()) return BigFloat(bits);

  // angle = q*2pi + rem with |q| < 2^e. Carrying 2pi to bits + e + guard
  // bits keeps q*2pi exact to below the final ulp of rem.
  const long magnitude = std::max(0L, angle.exponent());
  const unsigned wide = bits + static_cast<unsigned>(magnitude) + 32;
  const BigFloat two_pi = ldexp(pi(wide), 1);
  const BigFloat x = angle.rounded_to(wide);
  const BigFloat q = floor(x / two_pi);
  BigFloat rem = x - q * two_pi;
  // floor(x / 2pi) may be off by one when x sits next to a multiple.
  if (rem.sign() < 0) rem += two_pi;
  if (rem >= two_pi) rem -= two_pi;

  BigFloat out = rem.rounded_to(bits);
  // Rounding can land exactly on 2pi at the working precision.
  if (out >= two_pi.rounded_to(bits)) out = BigFloat(bits);
  return out;
}

DivergenceReport compare_trajectories(const Trajectory& a, const Trajectory& b,
                                      double threshold) {
  if (!(threshold > 0.0)) {
    throw ConfigError("threshold must be positive");
  }
  if (a.axis() != b.axis() || a.size() != b.size()) {
    throw StructuralError("trajectories are not sampled on the same set");
  }
  const unsigned bits = std::max(a.precision().significand_bits,
                                 b.precision().significand_bits);
  DivergenceReport report;
  report.threshold = threshold;
  report.per_step_abs_error.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].at != b[i].at) {
      throw StructuralError("trajectories differ in sample " +
                            std::to_string(i) + " abscissa");
    }
    const BigFloat diff =
        abs(a[i].value.rounded_to(bits) - b[i].value.rounded_to(bits));
    const double err = diff.to_double();
    report.per_step_abs_error.push_back(err);
    report.max_error = std::max(report.max_error, err);
    if (!report.first_divergent_index && err > threshold) {
      report.first_divergent_index = i;
    }
  }
  return report;
}

}  // namespace logistic
