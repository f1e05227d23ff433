#include "logistic/riccati_map.hpp"

#include <cmath>
#include <sstream>

#include "logistic/errors.hpp"

namespace logistic::riccati_map {
namespace {

void check_finite(const RiccatiMapParams& p) {
  if (!std::isfinite(p.r) || !std::isfinite(p.x0)) {
    throw ConfigError("map parameters r and x0 must be finite");
  }
}

void check_closed_form(const RiccatiMapParams& p) {
  check_finite(p);
  if (p.r == -1.0) {
    throw DomainError("r = -1 has no closed form: (1 + r)^{-n} is undefined");
  }
  if (p.x0 == 0.0) {
    throw DomainError("the particular solution requires x0 != 0");
  }
}

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma == 0.0) {
    throw ConfigError("gamma must be finite and nonzero");
  }
}

double particular_unchecked(const RiccatiMapParams& p, std::uint64_t n) {
  const double c = 1.0 / p.x0 - 1.0;
  if (c == 0.0) return 1.0;
  const double den =
      1.0 + c * std::pow(1.0 + p.r, -static_cast<double>(n));
  if (!(std::abs(den) >= kPoleThreshold)) {
    throw PoleError("particular solution has a pole at step " +
                        std::to_string(n),
                    static_cast<double>(n));
  }
  return 1.0 / den;
}

// Walks the general solution forward, keeping x_{k,1}, P_k and S_k.
class GeneralWalker {
 public:
  GeneralWalker(const RiccatiMapParams& p, double gamma)
      : p_(p), gamma_(gamma), x1_(particular_unchecked(p, 0)) {}

  double value() const {
    const double den = gamma_ + sum_;
    if (std::abs(den) < kPoleThreshold) {
      std::ostringstream os;
      os.precision(17);
      os << "general solution has a pole at step " << step_ << " (gamma = "
         << gamma_ << " cancels the accumulated sum)";
      throw PoleError(os.str(), static_cast<double>(step_));
    }
    return x1_ + product_ / den;
  }

  void advance() {
    const double x1_next = particular_unchecked(p_, step_ + 1);
    const double den = p_.r * (1.0 - x1_next) + 1.0;
    if (std::abs(den) < kPoleThreshold) {
      throw PoleError("coefficient denominator vanishes at step " +
                          std::to_string(step_),
                      static_cast<double>(step_));
    }
    const double g = (p_.r * x1_ + 1.0) / den;
    const double h = p_.r / den;
    if (g == 0.0) {
      throw PoleError("g vanishes at step " + std::to_string(step_),
                      static_cast<double>(step_));
    }
    product_ /= g;
    if (!std::isfinite(product_) || std::abs(product_) > kProductBound) {
      throw DomainError("coefficient product exceeds 1e300 at step " +
                        std::to_string(step_));
    }
    // Below the lower guard the correction is invisible in double.
    if (std::abs(product_) < 1.0 / kProductBound) product_ = 0.0;
    sum_ += product_ * h;
    x1_ = x1_next;
    ++step_;
  }

 private:
  RiccatiMapParams p_;
  double gamma_;
  double x1_;
  double product_ = 1.0;
  double sum_ = 0.0;
  std::uint64_t step_ = 0;
};

}  // namespace

Trajectory iterate(const RiccatiMapParams& p, std::uint64_t n) {
  check_finite(p);
  Trajectory out(Method::iterated, Axis::index,
                 PrecisionPolicy::double_precision());
  double x = p.x0;
  out.append(0.0, x);
  for (std::uint64_t k = 0; k < n; ++k) {
    const double den = 1.0 + p.r * x;
    if (std::abs(den) < kPoleThreshold) {
      throw PoleError("1 + r x_k vanishes at step " + std::to_string(k),
                      static_cast<double>(k));
    }
    x = x * (1.0 + p.r) / den;
    out.append(static_cast<double>(k + 1), x);
  }
  return out;
}

double particular_solution(const RiccatiMapParams& p, std::uint64_t n) {
  check_closed_form(p);
  return particular_unchecked(p, n);
}

RiccatiCoefficients coefficients(const RiccatiMapParams& p,
                                 std::uint64_t n_max) {
  check_closed_form(p);
  if (n_max == 0) throw ConfigError("n_max must be positive");
  RiccatiCoefficients out;
  out.g.reserve(n_max);
  out.h.reserve(n_max);
  double x1 = particular_unchecked(p, 0);
  for (std::uint64_t n = 0; n < n_max; ++n) {
    const double x1_next = particular_unchecked(p, n + 1);
    const double den = p.r * (1.0 - x1_next) + 1.0;
    if (std::abs(den) < kPoleThreshold) {
      throw PoleError("coefficient denominator vanishes at step " +
                          std::to_string(n),
                      static_cast<double>(n));
    }
    out.g.push_back((p.r * x1 + 1.0) / den);
    out.h.push_back(p.r / den);
    x1 = x1_next;
  }
  return out;
}

double general_solution(const RiccatiMapParams& p, double gamma,
                        std::uint64_t n) {
  check_closed_form(p);
  check_gamma(gamma);
  GeneralWalker walk(p, gamma);
  for (std::uint64_t k = 0; k < n; ++k) walk.advance();
  return walk.value();
}

Trajectory general_trajectory(const RiccatiMapParams& p, double gamma,
                              std::uint64_t n_max) {
  check_closed_form(p);
  check_gamma(gamma);
  Trajectory out(Method::riccati_general, Axis::index,
                 PrecisionPolicy::double_precision());
  GeneralWalker walk(p, gamma);
  out.append(0.0, walk.value());
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    walk.advance();
    out.append(static_cast<double>(k), walk.value());
  }
  return out;
}

Trajectory particular_trajectory(const RiccatiMapParams& p,
                                 std::uint64_t n_max) {
  check_closed_form(p);
  Trajectory out(Method::riccati_particular, Axis::index,
                 PrecisionPolicy::double_precision());
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    out.append(static_cast<double>(n), particular_unchecked(p, n));
  }
  return out;
}

}  // namespace logistic::riccati_map
