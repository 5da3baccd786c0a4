// Pauli and tensor-product algebra for two qubits: symmetric operator
// families, Bell-basis changes, partial transpose, Fano decomposition.
//
// Conventions (fixed once, everything downstream relies on them):
//   * |0> is the +1 eigenvector of sigma_3.
//   * Product basis ordered |00>, |01>, |10>, |11>; first factor = qubit 1.
//   * Bell basis ordered psi_1 = (|00>+|11>)/sqrt2, psi_2 = (|00>-|11>)/sqrt2,
//     psi_3 = (|01>+|10>)/sqrt2, psi_4 = (|01>-|10>)/sqrt2.
//   * Levi-Civita sign: eps_123 = +1.
#pragma once

#include "qfb/common.hpp"

namespace qfb {

enum class Basis { computational, bell };

/// 4x4 operator together with the basis its entries refer to. The algebra
/// helpers below produce and consume plain Mat4 values in the computational
/// basis; the tag exists so basis conversions cannot be applied twice.
struct TwoQubitOp {
  Mat4 m = Mat4::Zero();
  Basis basis = Basis::computational;
};

/// Fano coefficients of a Hermitian two-qubit operator:
///   rho = (1/4) [ r00 I + sum_i ri0_i sigma_i x I + sum_i r0i_i I x sigma_i
///                 + sum_ij rij_ij sigma_i x sigma_j ].
/// r00 equals the trace; it is kept so the round trip is exact for
/// non-unit-trace Hermitian input.
struct FanoCoefficients {
  double r00 = 1.0;
  Vec3d ri0 = Vec3d::Zero();  // sigma_i x I
  Vec3d r0i = Vec3d::Zero();  // I x sigma_i
  Eigen::Matrix3d rij = Eigen::Matrix3d::Zero();

  /// tau = sum_i rij_ii, the correlation-diagonal sum.
  double tau() const { return rij.trace(); }
};

/// sigma_0..sigma_3 (identity + Pauli matrices).
const Mat2& pauli(int i);

Mat4 kron2(const Mat2& a, const Mat2& b);

/// sigma_i x sigma_j for i, j in 0..3. Throws "index_out_of_range".
Mat4 tensor_pauli(int i, int j);

/// Sigma_i = sigma_i x I + I x sigma_i, i in 1..3.
Mat4 sigma_sym(int i);

/// S_ij = sigma_i x sigma_j + sigma_j x sigma_i, i, j in 1..3 (S_ii = 2 sigma_i x sigma_i).
Mat4 s_pair(int i, int j);

/// S = S_11 + S_22 + S_33.
Mat4 s_total();

/// P = (I - S/2)/4, the rank-1 projector onto the singlet; Q = I - P.
Mat4 proj_p();
Mat4 proj_q();

/// The full symmetric family in one call.
struct SymmetricOps {
  Mat4 Sigma[3];   // Sigma_1..Sigma_3
  Mat4 S[3][3];    // S_ij, symmetric in (i,j)
  Mat4 Stot;       // S
  Mat4 P, Q;
};
SymmetricOps symmetric_ops();

/// Bell state psi_k, k in 1..4.
Vec4c bell_state(int k);

/// Unitary whose columns are psi_1..psi_4.
const Mat4& bell_matrix();

/// Change of basis: entries (i,j) of the result are <psi_i|M|psi_j>.
/// Throws "wrong_basis" if the tag does not match the direction.
TwoQubitOp to_bell_basis(const TwoQubitOp& op);
TwoQubitOp from_bell_basis(const TwoQubitOp& op);

/// Transpose on the second tensor factor. The spectrum is the same for
/// either factor choice; the second is fixed here.
Mat4 partial_transpose(const Mat4& rho);

/// Conjugation by the SWAP of the two qubits.
Mat4 swap_qubits(const Mat4& op);

/// Fano decomposition of a Hermitian operator and its inverse.
FanoCoefficients fano_decompose(const Mat4& rho);
Mat4 fano_recompose(const FanoCoefficients& c);

/// Shortcut for fano_decompose(rho).tau().
double tau_of(const Mat4& rho);

}  // namespace qfb
