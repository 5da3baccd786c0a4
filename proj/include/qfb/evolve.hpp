// Deterministic propagation: exact exponential, adaptive Runge-Kutta
// trajectories with concurrence and correlation-sum tracking, and the
// closed-form benchmark solution.
#pragma once

#include <vector>

#include "qfb/entangle.hpp"
#include "qfb/generator.hpp"

namespace qfb {

/// Sampled trajectory: states with their concurrence and tau = sum_i
/// <sigma_i x sigma_i> at strictly increasing times.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> concurrences;
  std::vector<double> tau;
};

/// exp(t L) applied to rho0 through the exact matrix exponential. The
/// result is re-validated; t must be >= 0 ("negative_time").
DensityMatrix propagate(const Liouvillian& lio, const DensityMatrix& rho0,
                        double t);

/// Adaptive Dormand-Prince 5(4) integration (rtol 1e-10, atol 1e-12)
/// sampled on the given grid. The grid must be strictly increasing and
/// start at t >= 0 ("bad_grid"); a step-size collapse raises
/// "step_underflow" naming the failure time.
Trajectory integrate(const Liouvillian& lio, const DensityMatrix& rho0,
                     const std::vector<double>& grid);

/// Closed-form benchmark solution for the symmetric scenario at a=1, f=0,
/// gamma=1 (time in units of the relaxation rate), as an X-state:
///   diagonal (A, B-, B+, A), inner coherences z = C-,
///   A  = (1 - e^{-12t})/6,
///   B+- = (+-3 e^{-4t} cos(8 delta t) + e^{-12t} + 2)/6,
///   C+- = (-1 + e^{-12t} +- 3 i e^{-4t} sin(8 delta t))/6.
/// Throws "negative_time" for t < 0.
XState analytic_rho2(double t, double delta);

/// Concurrence of analytic_rho2 in closed form:
///   (1/3) [ sqrt(9 e^{-8t} sin^2(8 delta t) + (1-e^{-12t})^2) - (1-e^{-12t}) ].
double analytic_rho2_concurrence(double t, double delta);

}  // namespace qfb
