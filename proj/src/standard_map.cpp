#include "logistic/standard_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "logistic/errors.hpp"

namespace logistic::standard_map {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_params(const MapParams& p) {
  if (!std::isfinite(p.r) || !std::isfinite(p.x0)) {
    throw ConfigError("map parameters r and x0 must be finite");
  }
}

Interval seed_domain(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::r2: return {-kInf, kInf, false, false};
    case ClosedFormVariant::r4: return {0.0, 1.0};
    case ClosedFormVariant::rm2_table1:
    case ClosedFormVariant::rm2_simple: return {-0.5, 1.5};
  }
  return {0.0, 0.0};
}

void check_variant(const MapParams& p, ClosedFormVariant v) {
  check_params(p);
  if (p.r != required_r(v)) {
    std::ostringstream os;
    os << "closed form " << to_string(v) << " needs r = " << required_r(v)
       << ", got r = " << p.r;
    throw UsageError(os.str());
  }
  const Interval dom = seed_domain(v);
  if (!dom.contains(BigFloat(p.x0, kDoubleBits))) {
    std::ostringstream os;
    os << "closed form " << to_string(v) << " needs x0 in " << dom.describe()
       << ", got " << p.x0;
    throw DomainError(os.str());
  }
}

// (1 - 2x0)^(2^n) by n squarings.
BigFloat r2_closed_form(const BigFloat& x0, std::uint64_t n) {
  BigFloat base = 1.0 - ldexp(x0, 1);
  for (std::uint64_t k = 0; k < n; ++k) {
    if (base.is_zero() || base == 1.0) break;
    base = base * base;
    if (!base.is_finite() || abs(base) > kEscapeBound) {
      throw EscapeError("r = 2 closed form escapes", k + 1);
    }
  }
  return ldexp(1.0 - base, -1);
}

BigFloat doubled_angle(const BigFloat& theta, std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
    throw ConfigError("step count too large");
  }
  return reduce_mod_2pi(ldexp(theta, static_cast<long>(n)));
}

BigFloat table1_closed_form(const BigFloat& x0, std::uint64_t n) {
  const unsigned bits = x0.precision();
  const BigFloat half(0.5, bits);
  const BigFloat pi_w = pi(bits);
  const BigFloat phi = pi_w - 3.0 * acos(half - x0);
  // (-2)^n as a sign times an exact power of two.
  BigFloat scaled = ldexp(phi, static_cast<long>(n));
  if (n % 2 == 1) scaled = -scaled;
  const BigFloat angle = reduce_mod_2pi((pi_w - scaled) / 3.0);
  return half - cos(angle);
}

}  // namespace

double required_r(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::r2: return 2.0;
    case ClosedFormVariant::r4: return 4.0;
    case ClosedFormVariant::rm2_table1:
    case ClosedFormVariant::rm2_simple: return -2.0;
  }
  return 0.0;
}

Method method_of(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::r2: return Method::closed_form_r2;
    case ClosedFormVariant::r4: return Method::closed_form_r4;
    case ClosedFormVariant::rm2_table1: return Method::closed_form_rm2_table1;
    case ClosedFormVariant::rm2_simple: return Method::closed_form_rm2_simple;
  }
  return Method::oracle;
}

std::string_view to_string(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::r2: return "r2";
    case ClosedFormVariant::r4: return "r4";
    case ClosedFormVariant::rm2_table1: return "table1";
    case ClosedFormVariant::rm2_simple: return "simple";
  }
  return "?";
}

std::optional<ClosedFormVariant> parse_variant(std::string_view name) {
  for (auto v : {ClosedFormVariant::r2, ClosedFormVariant::r4,
                 ClosedFormVariant::rm2_table1, ClosedFormVariant::rm2_simple}) {
    if (name == to_string(v)) return v;
  }
  return std::nullopt;
}

bool Interval::contains(const BigFloat& x) const {
  if (!x.is_finite()) return false;
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string Interval::describe() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
  return os.str();
}

ConjugacyPair exponential_pair() {
  return {"exp",
          [](const BigFloat& x) { return exp(x); },
          [](const BigFloat& y) { return log(y); },
          {-kInf, kInf, false, false},
          {0.0, kInf, false, false},
          std::nullopt};
}

ConjugacyPair cosine_pair() {
  return {"cos",
          [](const BigFloat& x) { return cos(x); },
          [](const BigFloat& y) { return acos(y); },
          {-kInf, kInf, false, false},
          {-1.0, 1.0},
          2.0};
}

ConjugacyPair minus_two_pair() {
  auto f = [](const BigFloat& x) {
    const unsigned bits = x.precision();
    const BigFloat root3 = sqrt(BigFloat(3.0, bits));
    return 2.0 * cos((pi(bits) - root3 * x) / 3.0);
  };
  auto f_inverse = [](const BigFloat& y) {
    const unsigned bits = y.precision();
    const BigFloat root3 = sqrt(BigFloat(3.0, bits));
    return (pi(bits) - 3.0 * acos(ldexp(y, -1))) / root3;
  };
  return {"2cos((pi-sqrt3 x)/3)", f, f_inverse, {-kInf, kInf, false, false},
          {-2.0, 2.0}, std::nullopt};
}

Trajectory iterate(const MapParams& p, std::uint64_t n,
                   const PrecisionPolicy& policy) {
  check_params(p);
  policy.validate();
  const unsigned bits = policy.significand_bits;
  const BigFloat r(p.r, bits);
  BigFloat x(p.x0, bits);

  Trajectory out(Method::iterated, Axis::index, policy);
  out.append(0.0, x);
  for (std::uint64_t k = 1; k <= n; ++k) {
    x = r * x * (1.0 - x);
    if (!x.is_finite() || abs(x) > kEscapeBound) {
      throw EscapeError("orbit escapes beyond 1e100 at step " +
                            std::to_string(k),
                        k);
    }
    out.append(static_cast<double>(k), x);
  }
  return out;
}

double centered_step(double y, double r) {
  return -r * y * y + (r / 4.0 - 0.5);
}

BigFloat closed_form(const MapParams& p, std::uint64_t n, ClosedFormVariant v,
                     const PrecisionPolicy& policy) {
  policy.validate();
  check_variant(p, v);
  const unsigned bits = policy.significand_bits;
  const BigFloat x0(p.x0, bits);

  switch (v) {
    case ClosedFormVariant::r2:
      return r2_closed_form(x0, n);
    case ClosedFormVariant::r4: {
      const BigFloat theta = acos(1.0 - ldexp(x0, 1));
      return ldexp(1.0 - cos(doubled_angle(theta, n)), -1);
    }
    case ClosedFormVariant::rm2_table1:
      return table1_closed_form(x0, n);
    case ClosedFormVariant::rm2_simple: {
      const BigFloat theta = acos(x0 - 0.5);
      return 0.5 + cos(doubled_angle(theta, n));
    }
  }
  throw UsageError("unknown closed form variant");
}

Trajectory closed_form_trajectory(const MapParams& p, std::uint64_t n_max,
                                  ClosedFormVariant v,
                                  const PrecisionPolicy& policy) {
  Trajectory out(method_of(v), Axis::index, policy);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    out.append(static_cast<double>(n), closed_form(p, n, v, policy));
  }
  return out;
}

BigFloat conjugacy_solution(const ConjugacyPair& pair, double r, double x0,
                            std::uint64_t n, const PrecisionPolicy& policy) {
  policy.validate();
  check_params({r, x0});
  const unsigned bits = policy.significand_bits;
  const BigFloat y = 1.0 - ldexp(BigFloat(x0, bits), 1);
  if (!pair.f_inverse_domain.contains(y)) {
    throw DomainError("f_inverse of pair '" + pair.name + "': 1 - 2x0 = " +
                      y.to_string(17) + " outside " +
                      pair.f_inverse_domain.describe());
  }
  const BigFloat u = pair.f_inverse(y);

  // m^n, exact when |m| is a power of two.
  const double m = pair.multiplier.value_or(r);
  BigFloat scale(1.0, bits);
  int exp2 = 0;
  const double mant = std::frexp(std::abs(m), &exp2);
  if (mant == 0.5) {
    scale = ldexp(scale, static_cast<long>(n) * (exp2 - 1));
    if (m < 0 && n % 2 == 1) scale = -scale;
  } else {
    scale = pow(BigFloat(m, bits), static_cast<unsigned long>(n));
  }
  const BigFloat arg = scale * u;
  if (!pair.f_domain.contains(arg)) {
    throw DomainError("f of pair '" + pair.name + "': argument " +
                      arg.to_string(17) + " outside " +
                      pair.f_domain.describe());
  }
  return ldexp(1.0 - pair.f(arg), -1);
}

unsigned oracle_bits_for(std::uint64_t n_max, unsigned working_bits) {
  return std::max(512u, working_bits + default_oracle_bits(n_max));
}

DivergenceReport divergence_analysis(const MapParams& p, ClosedFormVariant v,
                                     std::uint64_t n_max,
                                     unsigned working_bits, double threshold,
                                     std::optional<unsigned> oracle_bits) {
  const auto working = PrecisionPolicy::with_bits(working_bits);
  const auto reference = PrecisionPolicy::with_bits(
      oracle_bits.value_or(oracle_bits_for(n_max, working_bits)));
  const Trajectory closed = closed_form_trajectory(p, n_max, v, working);
  const Trajectory oracle = iterate(p, n_max, reference);
  return compare_trajectories(closed, oracle, threshold);
}

DivergenceReport iteration_divergence(const MapParams& p, std::uint64_t n_max,
                                      unsigned working_bits, double threshold,
                                      std::optional<unsigned> oracle_bits) {
  const auto working = PrecisionPolicy::with_bits(working_bits);
  const auto reference = PrecisionPolicy::with_bits(
      oracle_bits.value_or(oracle_bits_for(n_max, working_bits)));
  return compare_trajectories(iterate(p, n_max, working),
                              iterate(p, n_max, reference), threshold);
}

std::vector<std::uint8_t> prng_bits(double x0, std::uint64_t count,
                                    std::uint64_t burn_in) {
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw DomainError("prng seed must lie in (0, 1)");
  }
  if (count == 0) throw ConfigError("prng bit count must be positive");

  const auto degenerate = [](double x) {
    return x == 0.0 || x == 1.0 || x == 0.75;
  };
  if (degenerate(x0)) {
    throw DegeneracyError("seed is a fixed point of the r = 4 map", 0);
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  double x = x0;
  for (std::uint64_t step = 1; step <= burn_in + count; ++step) {
    x = 4.0 * x * (1.0 - x);
    if (degenerate(x)) {
      throw DegeneracyError("orbit collapsed onto a fixed point at step " +
                                std::to_string(step) + "; choose another seed",
                            step);
    }
    if (step > burn_in) bits.push_back(x > 0.5 ? 1 : 0);
  }
  return bits;
}

}  // namespace logistic::standard_map
