#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "logistic/big_float.hpp"

namespace logistic {

inline constexpr unsigned kDoubleBits = 53;

/// Significand width used for an evaluation, plus the safety margin that
/// precision_budget adds on top of the expected bit loss.
struct PrecisionPolicy {
  unsigned significand_bits = kDoubleBits;
  unsigned baseline_bits = 64;

  /// Throws ConfigError if significand_bits < 53 or baseline_bits < 1.
  void validate() const;

  static PrecisionPolicy double_precision() { return {}; }
  static PrecisionPolicy with_bits(unsigned bits) { return {bits, 64}; }
};

enum class Method {
  iterated,
  closed_form_r2,
  closed_form_r4,
  closed_form_rm2_table1,
  closed_form_rm2_simple,
  conjugacy,
  oracle,
  ode_closed_form,
  ode_rk4,
  riccati_particular,
  riccati_general,
};

std::string_view to_string(Method m);

enum class Axis { index, time };

struct Sample {
  double at;  // step index (exact integer) or time
  BigFloat value;
};

/// Ordered samples of a scalar sequence or function, all at one precision.
/// append() enforces strictly increasing abscissae and finite values.
class Trajectory {
 public:
  Trajectory(Method method, Axis axis, PrecisionPolicy precision);

  void append(double at, BigFloat value);
  void append(double at, double value);

  Method method() const noexcept { return method_; }
  Axis axis() const noexcept { return axis_; }
  const PrecisionPolicy& precision() const noexcept { return precision_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

  std::vector<double> values_as_double() const;

 private:
  Method method_;
  Axis axis_;
  PrecisionPolicy precision_;
  std::vector<Sample> samples_;
};

struct DivergenceReport {
  std::vector<double> per_step_abs_error;
  std::optional<std::size_t> first_divergent_index;
  double threshold = 0.0;
  double max_error = 0.0;
};

/// Bits needed to carry `n_steps` of an iteration that loses
/// `bits_lost_per_step` per step: ceil(n * loss) + baseline, at least 53.
unsigned precision_budget(std::uint64_t n_steps, double bits_lost_per_step,
                          const PrecisionPolicy& policy);

/// Oracle precision for n steps of an angle-doubling map (one bit per step).
unsigned default_oracle_bits(std::uint64_t n_steps);

/// Reduces `angle` into [0, 2*pi). The result has the precision of `angle`;
/// the multiple of 2*pi is removed using pi carried to enough extra bits to
/// cover the magnitude of the input, so the only error is the final rounding.
BigFloat reduce_mod_2pi(const BigFloat& angle);

/// Pointwise absolute difference of two trajectories sampled on identical
/// abscissae, computed at the wider of the two precisions. Throws
/// StructuralError on mismatched sampling.
DivergenceReport compare_trajectories(const Trajectory& a, const Trajectory& b,
                                      double threshold);

}  // namespace logistic
