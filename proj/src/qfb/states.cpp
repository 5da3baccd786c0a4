#include "qfb/states.hpp"

#include <cmath>

namespace qfb {

namespace {

Mat4 basis_projector(int k) {
  Mat4 m = Mat4::Zero();
  m(k, k) = 1;
  return m;
}

Mat4 bell_projector(int k) {
  const Vec4c psi = bell_state(k);
  return psi * psi.adjoint();
}

}  // namespace

DensityMatrix validate(const Mat4& rho) {
  const double herm = max_abs(rho - rho.adjoint());
  if (herm > kStateTol)
    throw Error("not_hermitian",
                strfmt("max |rho - rho^dag| = %.3e exceeds %.0e", herm, kStateTol));
  const double tr_err = std::abs(rho.trace() - cd(1.0));
  if (tr_err > kStateTol)
    throw Error("not_unit_trace",
                strfmt("|tr(rho) - 1| = %.3e exceeds %.0e", tr_err, kStateTol));
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (rho + rho.adjoint()),
                                         Eigen::EigenvaluesOnly);
  const double mineig = es.eigenvalues().minCoeff();
  if (mineig < kPsdFloor)
    throw Error("not_psd",
                strfmt("min eigenvalue %.3e below floor %.0e", mineig, kPsdFloor));
  return DensityMatrix{rho};
}

Mat4 XState::to_matrix() const {
  Mat4 m = Mat4::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  m(1, 2) = z;
  m(2, 1) = std::conj(z);
  m(0, 3) = w;
  m(3, 0) = std::conj(w);
  return m;
}

XState xstate_cast(const DensityMatrix& rho) {
  const Mat4& m = rho.m;
  double worst = 0;
  int wi = 0, wj = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool on_pattern = (i == j) || (i + j == 3);
      if (on_pattern) continue;
      const double mag = std::abs(m(i, j));
      if (mag > worst) {
        worst = mag;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > -kPsdFloor)
    throw Error("not_x_form",
                strfmt("off-pattern entry (%d,%d) has magnitude %.3g, above %.0e",
                       wi, wj, worst, -kPsdFloor));
  XState x;
  x.a = m(0, 0).real();
  x.b = m(1, 1).real();
  x.c = m(2, 2).real();
  x.d = m(3, 3).real();
  x.z = m(1, 2);
  x.w = m(0, 3);
  return x;
}

DensityMatrix catalog(const std::string& name) {
  // rho1..rho4 follow the product-state layout: rho1 = |00>, rho2 = |10>,
  // rho3 = |01>, rho4 = |11> (first label = qubit 1).
  if (name == "rho1") return DensityMatrix{basis_projector(0)};
  if (name == "rho2") return DensityMatrix{basis_projector(2)};
  if (name == "rho3") return DensityMatrix{basis_projector(1)};
  if (name == "rho4") return DensityMatrix{basis_projector(3)};
  if (name == "bell1") return DensityMatrix{bell_projector(1)};
  if (name == "bell2") return DensityMatrix{bell_projector(2)};
  if (name == "bell3") return DensityMatrix{bell_projector(3)};
  if (name == "bell4") return DensityMatrix{bell_projector(4)};
  if (name == "maximally_mixed")
    return DensityMatrix{0.25 * Mat4::Identity()};
  throw Error("unknown_state", "unknown catalog state: " + name);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "rho1", "rho2", "rho3", "rho4", "bell1",
      "bell2", "bell3", "bell4", "maximally_mixed"};
  return names;
}

}  // namespace qfb
