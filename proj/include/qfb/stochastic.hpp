// Conditioned (filtered) trajectories under continuous homodyne monitoring
// of one Lindblad channel, with instantaneous Hamiltonian feedback, and
// their ensemble average.
#pragma once

#include <cstdint>
#include <vector>

#include "qfb/evolve.hpp"
#include "qfb/generator.hpp"

namespace qfb {

/// Configuration of a single monitored-channel run.
struct SmeConfig {
  LindbladOp L;          // monitored channel
  Mat4 F = Mat4::Zero(); // Hermitian feedback operator
  double eta = 1.0;      // detection efficiency, (0, 1]
  double dt = 1e-3;      // Euler-Maruyama step
  double T = 1.0;        // horizon
  std::uint64_t seed = 0;
};

/// One conditioned trajectory. states[k] is the repaired (symmetrized,
/// positive, renormalized) conditioned state after k steps; photocurrent[k]
/// is the k-th sample of I(t) dt.
struct ConditionedRecord {
  std::vector<double> times;
  std::vector<Mat4> states;
  std::vector<double> photocurrent;
};

/// Spectral floor below which a conditioned state counts as blown up.
/// One Euler step penetrates the boundary by O(|L|^2 dt) near pure states
/// (clamped away by the per-step projection); this floor sits far outside
/// that envelope at the default step size.
inline constexpr double kBlowUpFloor = -0.1;

/// Deterministic per-trajectory seed derivation (splitmix64 over the pair),
/// used by ensemble_mean; exposed so single trajectories of an ensemble can
/// be reproduced in isolation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Euler-Maruyama simulation of the diffusive conditioned equation
///   d rho = (-i[H, rho] + D[L] rho + sum_rest D[L_mu] rho) dt
///           + sqrt(eta) (L rho + rho L+ - tr[(L+L+)rho] rho) dW,
/// followed per step by the feedback kick exp(-i F I dt) with photocurrent
/// I dt = tr[(L+L+)rho] dt + dW/sqrt(eta). Unmonitored channels (K_rest)
/// evolve deterministically. Each step symmetrizes, clamps the O(dt)
/// boundary penetration of the Euler step back onto the state space, and
/// renormalizes; spectra below kBlowUpFloor abort with "state_blow_up".
ConditionedRecord simulate_trajectory(const Mat4& h,
                                      const KossakowskiMatrix& k_rest,
                                      const SmeConfig& cfg,
                                      const DensityMatrix& rho0);

/// Mean of n independent trajectories, sampled on the given grid (grid
/// times are matched to the nearest step). Converges to the averaged
/// feedback master equation at rate O(1/sqrt(n)) plus O(dt) bias.
Trajectory ensemble_mean(int n, const Mat4& h,
                         const KossakowskiMatrix& k_rest, const SmeConfig& cfg,
                         const DensityMatrix& rho0,
                         const std::vector<double>& grid);

}  // namespace qfb
