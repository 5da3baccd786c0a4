#include "qfb/entangle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qfb {

double concurrence(const DensityMatrix& rho) {
  const Mat4 s2s2 = tensor_pauli(2, 2);
  const Mat4 rho_tilde = s2s2 * rho.m.conjugate() * s2s2;
  Eigen::ComplexEigenSolver<Mat4> es(rho.m * rho_tilde, false);

  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    double x = es.eigenvalues()(i).real();
    if (x < 0) x = 0;  // clamp round-off negatives before the square root
    lam[static_cast<size_t>(i)] = std::sqrt(x);
  }
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence(const XState& x) {
  const double inner = std::abs(x.z) - std::sqrt(x.a * x.d);
  const double outer = std::abs(x.w) - std::sqrt(x.b * x.c);
  return 2.0 * std::max({0.0, inner, outer});
}

double negativity(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(partial_transpose(rho.m),
                                         Eigen::EigenvaluesOnly);
  double neg = 0;
  for (int i = 0; i < 4; ++i) {
    const double v = es.eigenvalues()(i);
    if (v < 0) neg -= v;
  }
  return neg;
}

ShortTimeResult short_time_entangles(const ShortTimeInput& in) {
  ShortTimeResult res;
  const double nu = in.u.norm();
  const double nv = in.v.norm();
  if (nu == 0 || nv == 0) return res;
  const Vec3c u = in.u / nu;
  const Vec3c v = in.v / nv;

  res.lhs = (u.adjoint() * in.A * u)(0).real() *
            (v.adjoint() * in.C.transpose() * v)(0).real();
  const Mat3 re_b = 0.5 * (in.B + in.B.transpose());
  const cd cross = (u.adjoint() * (re_b + cd(0, 1) * in.h12) * v)(0);
  res.rhs = std::norm(cross);

  // Strict inequality; ties within 1e-12 do not count.
  res.verdict = res.rhs - res.lhs >= 1e-12;
  return res;
}

Eigen::Matrix3d pauli_rotation(const Mat2& u_loc) {
  const double udev = max_abs(u_loc.adjoint() * u_loc - Mat2::Identity());
  if (udev > 1e-12)
    throw Error("not_unitary",
                strfmt("max |U^dag U - I| = %.3e exceeds 1e-12", udev));
  Eigen::Matrix3d rot;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      rot(i - 1, j - 1) =
          0.5 * (pauli(j) * (u_loc.adjoint() * pauli(i) * u_loc))
                    .trace()
                    .real();
  return rot;
}

void uv_vectors(const Mat2& u_loc, const Mat2& v_loc, Vec3c& u, Vec3c& v) {
  const Eigen::Matrix3d ru = pauli_rotation(u_loc);
  const Eigen::Matrix3d rv = pauli_rotation(v_loc);
  Vec3c s01, s10;
  for (int j = 1; j <= 3; ++j) {
    s01(j - 1) = pauli(j)(0, 1);
    s10(j - 1) = pauli(j)(1, 0);
  }
  u = ru.cast<cd>() * s01;
  v = rv.cast<cd>() * s10;
}

bool small_eta_degenerate(const Vec3d& f, const Vec3d& g, const Mat2& u_loc,
                          const Mat2& v_loc) {
  // Leading 1/eta^2 order of the feedback criterion. In the rotated frames
  // ft = U^T f, gt = V^T g the gap rhs - lhs collapses by the Lagrange
  // identity to -(ft_1 gt_2 - ft_2 gt_1)^2, so the strict form never holds.
  const Vec3d ft = pauli_rotation(u_loc).transpose() * f;
  const Vec3d gt = pauli_rotation(v_loc).transpose() * g;
  const double cross = ft(0) * gt(1) - ft(1) * gt(0);
  return -(cross * cross) > 0.0;
}

}  // namespace qfb
