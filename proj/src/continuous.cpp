#include "logistic/continuous.hpp"

#include <cmath>
#include <sstream>

#include "logistic/errors.hpp"

namespace logistic::continuous {
namespace {

template <typename T>
T lift(double v, unsigned bits);

template <>
double lift<double>(double v, unsigned) {
  return v;
}

template <>
BigFloat lift<BigFloat>(double v, unsigned bits) {
  return BigFloat(v, bits);
}

void check_params(const ContinuousParams& p) {
  if (!std::isfinite(p.r) || p.r == 0.0) {
    throw ConfigError("growth rate r must be finite and nonzero");
  }
  if (!std::isfinite(p.x0)) throw ConfigError("x0 must be finite");
}

void check_shift(const RiccatiShift& s) {
  if (!std::isfinite(s.gamma) || s.gamma == 0.0) {
    throw ConfigError("gamma must be finite and nonzero");
  }
}

void check_time(double t) {
  if (!std::isfinite(t)) throw ConfigError("time must be finite");
}

std::string at_time(double t) {
  std::ostringstream os;
  os.precision(17);
  os << " at t = " << t;
  return os.str();
}

// 1 / (1 + c e^{-rt}) where c = 1/x(0) - 1.
template <typename T>
T logistic_curve(double t, double r, const T& c, unsigned bits) {
  using std::abs;
  using std::exp;
  if (c == 0.0) return lift<T>(1.0, bits);
  const T decay = exp(lift<T>(-r, bits) * t);
  const T den = 1.0 + c * decay;
  if (abs(den) < kPoleThreshold) {
    throw PoleError("logistic solution has a pole" + at_time(t), t);
  }
  return 1.0 / den;
}

template <typename T>
T particular(double t, const ContinuousParams& p, unsigned bits) {
  check_params(p);
  check_time(t);
  if (p.x0 == 0.0) {
    throw DomainError("particular solution requires x0 != 0");
  }
  const T c = 1.0 / lift<T>(p.x0, bits) - 1.0;
  return logistic_curve<T>(t, p.r, c, bits);
}

template <typename T>
T general(double t, const ContinuousParams& p, const RiccatiShift& s,
          unsigned bits) {
  check_params(p);
  check_shift(s);
  check_time(t);
  if (p.x0 == 0.0) {
    throw DomainError("general solution requires x0 != 0");
  }
  const T gamma = lift<T>(s.gamma, bits);
  const T x0 = lift<T>(p.x0, bits);
  const T c = (gamma - x0) / (gamma * x0) - 1.0;
  return logistic_curve<T>(t, p.r, c, bits);
}

}  // namespace

double particular_solution(double t, const ContinuousParams& p) {
  return particular<double>(t, p, kDoubleBits);
}

BigFloat particular_solution(double t, const ContinuousParams& p,
                             const PrecisionPolicy& policy) {
  policy.validate();
  return particular<BigFloat>(t, p, policy.significand_bits);
}

double general_solution(double t, const ContinuousParams& p,
                        const RiccatiShift& s) {
  return general<double>(t, p, s, kDoubleBits);
}

BigFloat general_solution(double t, const ContinuousParams& p,
                          const RiccatiShift& s,
                          const PrecisionPolicy& policy) {
  policy.validate();
  return general<BigFloat>(t, p, s, policy.significand_bits);
}

double general_solution_product_form(double t, const ContinuousParams& p,
                                     const RiccatiShift& s) {
  check_shift(s);
  const double x1 = particular_solution(t, p);
  const double inner = s.gamma * (std::exp(p.r * t) + (1.0 / p.x0 - 1.0)) - 1.0;
  if (std::abs(inner) < kPoleThreshold) {
    throw PoleError("general solution has a pole" + at_time(t), t);
  }
  return x1 * (1.0 + 1.0 / inner);
}

double effective_initial_condition(const ContinuousParams& p,
                                   const RiccatiShift& s) {
  check_params(p);
  check_shift(s);
  const double den = s.gamma - p.x0;
  if (std::abs(den) < kPoleThreshold) {
    throw PoleError("gamma == x0 sends the initial condition to infinity",
                    0.0);
  }
  return s.gamma * p.x0 / den;
}

double gamma_lower_bound(double x0) {
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw DomainError("gamma lower bound needs x0 in (0, 1)");
  }
  return x0 / (1.0 - x0);
}

GammaStatus gamma_status(const ContinuousParams& p, const RiccatiShift& s) {
  if (p.x0 > 0.0 && p.x0 < 1.0 && s.gamma > gamma_lower_bound(p.x0)) {
    return GammaStatus::admissible;
  }
  return GammaStatus::outside_range;
}

Trajectory rk4_oracle(const ContinuousParams& p, double t_end, double dt) {
  check_params(p);
  if (!(dt > 0.0) || !(t_end > 0.0) || !std::isfinite(t_end) || dt > t_end) {
    throw ConfigError("rk4 needs 0 < dt <= t_end");
  }
  if (std::abs(p.r) * dt >= 0.1) {
    throw ConfigError("rk4 step too large: |r| * dt must be < 0.1");
  }
  const auto rhs = [r = p.r](double x) { return r * x * (1.0 - x); };
  const auto steps =
      static_cast<std::size_t>(std::floor(t_end / dt * (1.0 + 1e-12)));

  Trajectory out(Method::ode_rk4, Axis::time, PrecisionPolicy::double_precision());
  double x = p.x0;
  out.append(0.0, x);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double k1 = rhs(x);
    const double k2 = rhs(x + 0.5 * dt * k1);
    const double k3 = rhs(x + 0.5 * dt * k2);
    const double k4 = rhs(x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.append(static_cast<double>(k) * dt, x);
  }
  return out;
}

}  // namespace logistic::continuous
