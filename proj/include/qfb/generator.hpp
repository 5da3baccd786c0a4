// GKSL generator assembly: Kossakowski matrices over the fixed coupling
// basis, dissipators, Lindblad extraction, and the 16x16 Liouvillian.
//
// Coupling basis (1-based): F_1..F_3 = sigma_i x I, F_4..F_6 = I x sigma_i.
// Vectorization is column-stacking: vec(A rho B) = (B^T kron A) vec(rho).
#pragma once

#include <vector>

#include "qfb/qops.hpp"

namespace qfb {

/// 6x6 Hermitian coefficient matrix of the dissipator, with named 3x3
/// blocks: A (qubit-1 sector), B (cross), C (qubit-2 sector):
///   K = [ A  B ]
///       [ B+ C ]
class KossakowskiMatrix {
 public:
  KossakowskiMatrix() : k_(Mat6::Zero()) {}

  /// Throws "not_hermitian" above the 1e-12 tolerance.
  explicit KossakowskiMatrix(const Mat6& k);

  static KossakowskiMatrix from_blocks(const Mat3& a, const Mat3& b,
                                       const Mat3& c);

  const Mat6& entries() const { return k_; }
  Mat3 A() const { return k_.block<3, 3>(0, 0); }
  Mat3 B() const { return k_.block<3, 3>(0, 3); }
  Mat3 C() const { return k_.block<3, 3>(3, 3); }

  /// PSD with eigenvalue floor -1e-10.
  bool is_psd() const;

 private:
  Mat6 k_;
};

/// Lindblad operator L = sum_i l_i sigma_i x I + sum_i r_i I x sigma_i.
struct LindbladOp {
  Vec3c l = Vec3c::Zero();
  Vec3c r = Vec3c::Zero();
  Mat4 op = Mat4::Zero();  // cached matrix form
};

LindbladOp make_lindblad(const Vec3c& l, const Vec3c& r);

/// Coupling operator F_alpha, alpha in 1..6.
Mat4 coupling_op(int alpha);

/// sum_ab K_ab [ F_a rho F_b - (1/2){F_b F_a, rho} ]. Traceless for any K;
/// Hermitian for Hermitian rho.
Mat4 dissipator_apply(const KossakowskiMatrix& k, const Mat4& rho);

/// Single-channel dissipator D[L]rho = L rho L+ - (1/2){L+ L, rho}.
Mat4 dissipator_single(const Mat4& l, const Mat4& rho);

/// Diagonalizes K and returns L_mu = sqrt(lambda_mu) sum_a U_{a mu} F_a,
/// dropping eigenvalues below 1e-12 * lambda_max. Throws "not_psd" when an
/// eigenvalue sits below the -1e-10 floor.
std::vector<LindbladOp> lindblad_extract(const KossakowskiMatrix& k);

/// Rank-1 Kossakowski matrix c c+ of a single Lindblad operator, c = (l; r).
KossakowskiMatrix kossakowski_of(const LindbladOp& op);

/// 16x16 generator matrix together with the Hamiltonian and Kossakowski
/// matrix it was assembled from.
class Liouvillian {
 public:
  Liouvillian() : m_(Mat16::Zero()), h_(Mat4::Zero()) {}
  Liouvillian(Mat16 m, Mat4 h, KossakowskiMatrix k)
      : m_(std::move(m)), h_(std::move(h)), k_(std::move(k)) {}

  const Mat16& matrix() const { return m_; }
  const Mat4& hamiltonian() const { return h_; }
  const KossakowskiMatrix& kossakowski() const { return k_; }

  /// unvec(matrix * vec(rho)).
  Mat4 apply(const Mat4& rho) const;

 private:
  Mat16 m_;
  Mat4 h_;
  KossakowskiMatrix k_;
};

/// Assembles -i[H, .] + dissipator as a 16x16 matrix.
/// Throws "not_hermitian" when H or K fails the 1e-12 Hermiticity check.
Liouvillian liouvillian(const Mat4& h, const KossakowskiMatrix& k);

Vec16 vec(const Mat4& m);
Mat4 unvec(const Vec16& v);

/// Superoperator of -i[H, .].
Mat16 commutator_super(const Mat4& h);

/// Superoperator of the Kossakowski dissipator.
Mat16 dissipator_super(const KossakowskiMatrix& k);

/// Choi matrix of a 4x4-system superoperator (for complete-positivity
/// checks): C = (S kron id)(|omega><omega|) up to the standard reshuffle.
Mat16 choi_matrix(const Mat16& superop);

}  // namespace qfb
