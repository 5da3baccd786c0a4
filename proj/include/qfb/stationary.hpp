// Stationary-state analysis of the symmetric scenario at gamma = delta = 1:
// the faithful invariant state, the tau-parametrized asymptotic manifold,
// asymptotic concurrence, and feedback-strength optimization.
#pragma once

#include <utility>
#include <vector>

#include "qfb/generator.hpp"
#include "qfb/states.hpp"

namespace qfb {

/// Coefficients of the faithful stationary state in the symmetric-operator
/// expansion (Lc is the S_12 coefficient; the name avoids clashing with
/// Lindblad operators).
struct FaithfulCoefficients {
  double M = 0, N = 0, R = 0, Lc = 0;
  double a = 0, f = 0;
};

/// The faithful (full-rank) stationary state of the scenario generator:
///   rho0 = (1/4)[ I + M Sigma_3 - N (S_11 - S_22) + R S_33 - Lc S_12 ].
/// Requires a > 0 ("non_positive_rate").
std::pair<FaithfulCoefficients, DensityMatrix> faithful_state(double a,
                                                              double f);

/// Orthonormal basis (as matrices) of the generator's null space, from an
/// SVD with threshold sigma < 1e-10 * sigma_max.
std::vector<Mat4> kernel_basis(const Liouvillian& lio);

/// One point of the asymptotic manifold.
struct AsymptoticCoeffs {
  double rho3 = 0;   // Sigma_3
  double rho12 = 0;  // S_12
  double rho11 = 0, rho22 = 0, rho33 = 0;  // S_ii
};

struct AsymptoticState {
  double tau = 0;
  XState xstate;
  AsymptoticCoeffs coeffs;
  DensityMatrix state;
};

/// The stationary state reached from initial data with correlation sum tau:
///   rho = (1/4)[ I + rho3 Sigma_3 + rho12 S_12 + sum_i rho_ii S_ii ].
/// Requires -3 <= tau <= 1 ("tau_out_of_range") and a > 0.
AsymptoticState asymptotic_state(double tau, double a, double f);

struct AsymptoticConcurrence {
  double C = 0;
  double D1 = 0;
  double D2 = 0;
};

/// Closed-form asymptotic concurrence C = 2 max{0, D1, D2}.
AsymptoticConcurrence asymptotic_concurrence(double tau, double a, double f);

struct OptimalFeedback {
  double f_star = 0;
  double c_star = 0;
};

/// Maximizes the asymptotic concurrence over f in [f_lo, f_hi] by dense
/// grid scan plus golden-section refinement to |df| < 1e-4. Deterministic.
/// Throws "empty_range" when f_hi < f_lo.
OptimalFeedback optimize_feedback(double a, double tau, double f_lo,
                                  double f_hi);

}  // namespace qfb
