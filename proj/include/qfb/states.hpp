// Density-matrix validation, the X-state parametrization, and the named
// catalog of benchmark states.
#pragma once

#include <string>
#include <vector>

#include "qfb/qops.hpp"

namespace qfb {

// Shared numerical floors: Hermiticity/trace tolerance and the PSD
// eigenvalue floor (also used as the X-pattern detection threshold).
inline constexpr double kStateTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

/// A validated two-qubit density matrix; obtain one through validate().
struct DensityMatrix {
  Mat4 m = 0.25 * Mat4::Identity();
};

/// Checks Hermiticity (1e-12), unit trace (1e-12) and positivity
/// (min eigenvalue >= -1e-10). Throws "not_hermitian" / "not_unit_trace" /
/// "not_psd" naming the violated bound and its magnitude.
DensityMatrix validate(const Mat4& rho);

/// X-form state
///   [ a  0  0  w ]
///   [ 0  b  z  0 ]
///   [ 0 z*  c  0 ]
///   [ w* 0  0  d ]
/// in the computational basis. Valid when a+b+c+d = 1, all four diagonals
/// are nonnegative, |z| <= sqrt(bc) and |w| <= sqrt(ad).
struct XState {
  double a = 0, b = 0, c = 0, d = 0;
  cd z = 0, w = 0;

  Mat4 to_matrix() const;
};

/// Extracts the X-form parameters. Off-pattern entries above 1e-10 raise
/// "not_x_form" reporting the largest offender.
XState xstate_cast(const DensityMatrix& rho);

/// Named benchmark states: rho1..rho4 (computational product states),
/// bell1..bell4 (Bell projectors), maximally_mixed. Throws "unknown_state".
DensityMatrix catalog(const std::string& name);

const std::vector<std::string>& catalog_names();

}  // namespace qfb
