#pragma once

#include "logistic/big_float.hpp"
#include "logistic/precision.hpp"

// Closed-form solutions of the logistic ODE  dx/dt = r x (1 - x).
namespace logistic::continuous {

struct ContinuousParams {
  double r = 1.0;   // growth rate, nonzero
  double x0 = 0.5;  // x(0)
};

/// Free constant of the general Riccati solution: the value y(0) of the
/// auxiliary linear equation for y = 1 / (x_g - x_1).
struct RiccatiShift {
  double gamma = 1.0;
};

/// Denominators smaller than this in magnitude are treated as poles.
inline constexpr double kPoleThreshold = 1e-300;

enum class GammaStatus {
  admissible,     // x0/(1-x0) < gamma, the bounded family
  outside_range,  // formula defined, but the trajectory may leave (0, 1)
};

/// x_1(t) = 1 / (1 + (1/x0 - 1) e^{-rt}).
double particular_solution(double t, const ContinuousParams& p);
BigFloat particular_solution(double t, const ContinuousParams& p,
                             const PrecisionPolicy& policy);

/// General Riccati solution in its re-initialized form,
/// 1 / (1 + ((gamma - x0)/(gamma x0) - 1) e^{-rt}).
double general_solution(double t, const ContinuousParams& p,
                        const RiccatiShift& s);
BigFloat general_solution(double t, const ContinuousParams& p,
                          const RiccatiShift& s, const PrecisionPolicy& policy);

/// The same family written as the particular solution times a correction,
/// x_1(t) (1 + 1 / (gamma (e^{rt} + 1/x0 - 1) - 1)).
double general_solution_product_form(double t, const ContinuousParams& p,
                                     const RiccatiShift& s);

/// gamma x0 / (gamma - x0): the initial value that makes the particular
/// solution coincide with the general one.
double effective_initial_condition(const ContinuousParams& p,
                                   const RiccatiShift& s);

/// x0 / (1 - x0) for x0 in (0, 1).
double gamma_lower_bound(double x0);

GammaStatus gamma_status(const ContinuousParams& p, const RiccatiShift& s);

/// Classical RK4 integration of the ODE from t=0 to t_end with fixed step dt,
/// sampled at every multiple of dt. Requires dt <= t_end and |r| dt < 0.1.
Trajectory rk4_oracle(const ContinuousParams& p, double t_end, double dt);

}  // namespace logistic::continuous
