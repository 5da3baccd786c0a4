// Entanglement measures (Wootters concurrence, PPT negativity) and the
// short-time entanglement-generation criterion for product initial states.
#pragma once

#include "qfb/states.hpp"

namespace qfb {

/// Wootters concurrence via the eigenvalues of rho (s2 x s2) rho* (s2 x s2).
double concurrence(const DensityMatrix& rho);

/// Closed-form X-state concurrence 2 max{0, |z| - sqrt(ad), |w| - sqrt(bc)}.
double concurrence(const XState& x);

/// Negativity: |sum of negative eigenvalues of the partial transpose|.
/// Zero exactly on separable two-qubit states.
double negativity(const DensityMatrix& rho);

/// Inputs of the short-time criterion. A, B, C are the 3x3 blocks of the
/// total (base plus feedback-corrected) Kossakowski matrix; h12 is the
/// Hamiltonian's sigma_i x sigma_j coefficient matrix; u, v encode the
/// local product-state directions.
struct ShortTimeInput {
  Mat3 A = Mat3::Zero();
  Mat3 B = Mat3::Zero();
  Mat3 C = Mat3::Zero();
  Mat3 h12 = Mat3::Zero();
  Vec3c u = Vec3c::Zero();
  Vec3c v = Vec3c::Zero();
};

struct ShortTimeResult {
  bool verdict = false;
  double lhs = 0;
  double rhs = 0;
};

/// Evaluates the strict criterion
///   <u|A|u> <v|C^T|v> < |<u|(Re B + i h12)|v>|^2
/// with Re B = (B + B^T)/2. u and v are normalized internally, so lhs and
/// rhs are reported on the scale of unit product vectors. Ties within
/// 1e-12 count as not satisfied.
ShortTimeResult short_time_entangles(const ShortTimeInput& in);

/// The u, v vectors induced by local unitaries U, V:
///   u_i = sum_j UU_ij <0|sigma_j|1>,  v_i = sum_j VV_ij <1|sigma_j|0>,
/// where UU is the rotation with U+ sigma_i U = sum_j UU_ij sigma_j (same
/// for V). Throws "not_unitary" above a 1e-12 unitarity tolerance.
void uv_vectors(const Mat2& u_loc, const Mat2& v_loc, Vec3c& u, Vec3c& v);

/// Adjoint-action rotation of a single-qubit unitary.
Eigen::Matrix3d pauli_rotation(const Mat2& u_loc);

/// Low-efficiency limit of the feedback criterion for real coupling
/// vectors f, g and local unitaries U, V. The inequality reduces to
/// (ft_1 gt_2 - ft_2 gt_1)^2 < 0 and is therefore always false; the
/// function evaluates it anyway and returns the verdict.
bool small_eta_degenerate(const Vec3d& f, const Vec3d& g, const Mat2& u_loc,
                          const Mat2& v_loc);

}  // namespace qfb
