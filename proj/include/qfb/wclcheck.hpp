// Compatibility test between a Hamiltonian and a collective dissipator:
// whether the coherent and dissipative parts of the generator commute, so
// that the dissipator survives a weak-coupling derivation unchanged.
//
// The dissipator considered here has all four Kossakowski blocks equal to
// diag(a11, a22, a33). Such a generator preserves the triplet sector
// spanned by the Bell states (psi1, psi3, psi2); on that sector the action
// is represented on the 9 real components
//   (p1, p2, p3 | Re c01, Im c01 | Re c02, Im c02 | Re c12, Im c12)
// where p_k are populations and c_mn the coherences in the basis order
// (psi1, psi3, psi2). The verdict is computed on this 9x9 representation
// and cross-checked on the full 16x16 superoperators, which also covers
// the singlet row and column.
#pragma once

#include <string>
#include <vector>

#include "qfb/generator.hpp"

namespace qfb {

using Mat9d = Eigen::Matrix<double, 9, 9>;

/// Restriction of a Hamiltonian to the triplet sector, in the basis order
/// (psi1, psi3, psi2). Requires h Hermitian.
Mat3 triplet_block(const Mat4& h);

/// 9x9 real representation of -i[h, .] on the triplet sector.
Mat9d hamiltonian_qrep(const Mat4& h);

/// 9x9 real representation of the collective dissipator with rates
/// (a11, a22, a33). Populations mix pairwise; coherences decay
/// componentwise. Requires nonnegative rates ("negative_rate").
Mat9d dissipator_qrep(const Vec3d& a_diag);

struct WclResult {
  bool compatible = false;
  double commutator_norm = 0;       // triplet-sector route
  double threshold = 0;
  double commutator_norm_full = 0;  // full superoperator route
  double threshold_full = 0;
  /// Human-readable list of Hamiltonian or rate components that break
  /// the commutation. Empty when compatible.
  std::vector<std::string> offending;
};

/// Tests whether [-i[h,.], D] = 0 for the collective dissipator with the
/// given rates. Both routes must agree below their relative thresholds.
WclResult wcl_compatible(const Mat4& h, const Vec3d& a_diag);

}  // namespace qfb
