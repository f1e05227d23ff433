#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logistic/big_float.hpp"
#include "logistic/precision.hpp"

// The logistic map x_{n+1} = r x_n (1 - x_n): iteration at any precision and
// its closed forms at r = 2, 4 and -2.
namespace logistic::standard_map {

struct MapParams {
  double r = 4.0;
  double x0 = 0.3;
};

/// Orbits leaving this magnitude are reported as escaped.
inline constexpr double kEscapeBound = 1e100;

enum class ClosedFormVariant {
  r2,          // (1 - (1 - 2x0)^(2^n)) / 2
  r4,          // (1 - cos(2^n acos(1 - 2x0))) / 2
  rm2_table1,  // 1/2 - cos((pi - (-2)^n (pi - 3 acos(1/2 - x0))) / 3)
  rm2_simple,  // 1/2 + cos(2^n acos(x0 - 1/2))
};

/// The only r for which a variant is a solution.
double required_r(ClosedFormVariant v);
Method method_of(ClosedFormVariant v);
std::string_view to_string(ClosedFormVariant v);
/// Accepts the CLI spellings: r2, r4, table1, simple.
std::optional<ClosedFormVariant> parse_variant(std::string_view name);

struct Interval {
  double lo;
  double hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const BigFloat& x) const;
  std::string describe() const;
};

/// A function f and its inverse such that the map is conjugate to a linear
/// scaling u -> m u: x_n = (1 - f(m^n f_inverse(1 - 2 x0))) / 2.
/// The multiplier m is the map parameter r unless the pair fixes it; the
/// cosine pair needs m = 2 at r = 4 because cos(2u) = 2 cos(u)^2 - 1.
struct ConjugacyPair {
  std::string name;
  std::function<BigFloat(const BigFloat&)> f;
  std::function<BigFloat(const BigFloat&)> f_inverse;
  Interval f_domain;
  Interval f_inverse_domain;
  std::optional<double> multiplier;
};

/// f = exp, f_inverse = log on (0, inf); solves r = 2 for x0 < 1/2.
ConjugacyPair exponential_pair();
/// f = cos, f_inverse = acos on [-1, 1], multiplier 2; solves r = 4.
ConjugacyPair cosine_pair();
/// f(x) = 2 cos((pi - sqrt(3) x) / 3),
/// f_inverse(y) = (pi - 3 acos(y / 2)) / sqrt(3) on [-2, 2]; solves r = -2.
ConjugacyPair minus_two_pair();

/// Samples 0..n of the recurrence evaluated at policy precision.
/// Throws EscapeError once |x_k| exceeds kEscapeBound.
Trajectory iterate(const MapParams& p, std::uint64_t n,
                   const PrecisionPolicy& policy);

/// One step of the recentred map y = x - 1/2: y' = -r y^2 + (r/4 - 1/2).
double centered_step(double y, double r);

/// Closed form at step n, evaluated entirely at policy precision. Angles
/// 2^n theta are formed exactly and reduced mod 2pi before the final cosine.
BigFloat closed_form(const MapParams& p, std::uint64_t n, ClosedFormVariant v,
                     const PrecisionPolicy& policy);

Trajectory closed_form_trajectory(const MapParams& p, std::uint64_t n_max,
                                  ClosedFormVariant v,
                                  const PrecisionPolicy& policy);

BigFloat conjugacy_solution(const ConjugacyPair& pair, double r, double x0,
                            std::uint64_t n, const PrecisionPolicy& policy);

/// Precision of the reference iteration used by the divergence reports:
/// at least 512 bits, and never less than working_bits plus the one bit per
/// step budget for n_max steps.
unsigned oracle_bits_for(std::uint64_t n_max, unsigned working_bits);

/// Closed form at working_bits against the high-precision iteration.
DivergenceReport divergence_analysis(
    const MapParams& p, ClosedFormVariant v, std::uint64_t n_max,
    unsigned working_bits, double threshold,
    std::optional<unsigned> oracle_bits = std::nullopt);

/// Plain iteration at working_bits against the high-precision iteration.
DivergenceReport iteration_divergence(
    const MapParams& p, std::uint64_t n_max, unsigned working_bits,
    double threshold, std::optional<unsigned> oracle_bits = std::nullopt);

/// Bits from the r = 4 map at double precision: after burn_in discarded
/// steps, each further step emits 1 iff x > 1/2. Landing exactly on 0, 1 or
/// 3/4 throws DegeneracyError.
std::vector<std::uint8_t> prng_bits(double x0, std::uint64_t count,
                                    std::uint64_t burn_in);

}  // namespace logistic::standard_map
