#pragma once

#include <cstdint>
#include <vector>

#include "logistic/precision.hpp"

// The backward-coupled logistic map x_{n+1} - x_n = r x_n (1 - x_{n+1}),
// its particular solution and its one-parameter general Riccati solution.
// Everything here runs in double precision.
namespace logistic::riccati_map {

struct RiccatiMapParams {
  double r = 1.0;
  double x0 = 0.5;
};

inline constexpr double kPoleThreshold = 1e-300;
inline constexpr double kProductBound = 1e300;

/// Coefficients of the linearized correction, indices 0..n_max-1:
///   g_n = (r x_{n,1} + 1) / (r (1 - x_{n+1,1}) + 1)
///   h_n = r / (r (1 - x_{n+1,1}) + 1)
struct RiccatiCoefficients {
  std::vector<double> g;
  std::vector<double> h;
};

/// Explicit form of the implicit recurrence: x_{k+1} = x_k (1 + r) / (1 + r x_k).
/// r = -1 is allowed here (every later sample is 0).
Trajectory iterate(const RiccatiMapParams& p, std::uint64_t n);

/// x_{n,1} = 1 / (1 + (1/x0 - 1) (1 + r)^{-n}); needs x0 != 0, r != -1.
double particular_solution(const RiccatiMapParams& p, std::uint64_t n);

RiccatiCoefficients coefficients(const RiccatiMapParams& p,
                                 std::uint64_t n_max);

/// x_{n,g} = x_{n,1} + P_n / (gamma + S_n) with
///   P_n = prod_{k<n} 1/g_k,  S_n = sum_{k<n} (prod_{j<=k} 1/g_j) h_k.
/// Empty product is 1 and empty sum is 0, so x_{0,g} = x0 + 1/gamma.
double general_solution(const RiccatiMapParams& p, double gamma,
                        std::uint64_t n);

/// Samples 0..n_max of the general solution in one O(n_max) pass.
Trajectory general_trajectory(const RiccatiMapParams& p, double gamma,
                              std::uint64_t n_max);

Trajectory particular_trajectory(const RiccatiMapParams& p,
                                 std::uint64_t n_max);

}  // namespace logistic::riccati_map
