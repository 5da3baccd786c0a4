#include "qfb/wclcheck.hpp"

#include <array>
#include <cmath>

#include "qfb/qops.hpp"

namespace qfb {

namespace {

// Triplet-sector Bell states in the internal order (psi1, psi3, psi2).
std::array<Vec4c, 3> triplet_states() {
  return {bell_state(1), bell_state(3), bell_state(2)};
}

// Hermitian 3x3 matrix from the 9 real components.
Mat3 from_components(const Eigen::Matrix<double, 9, 1>& x) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = x(0);
  m(1, 1) = x(1);
  m(2, 2) = x(2);
  m(0, 1) = cd(x(3), x(4));
  m(1, 0) = std::conj(m(0, 1));
  m(0, 2) = cd(x(5), x(6));
  m(2, 0) = std::conj(m(0, 2));
  m(1, 2) = cd(x(7), x(8));
  m(2, 1) = std::conj(m(1, 2));
  return m;
}

Eigen::Matrix<double, 9, 1> to_components(const Mat3& m) {
  Eigen::Matrix<double, 9, 1> x;
  x(0) = m(0, 0).real();
  x(1) = m(1, 1).real();
  x(2) = m(2, 2).real();
  x(3) = m(0, 1).real();
  x(4) = m(0, 1).imag();
  x(5) = m(0, 2).real();
  x(6) = m(0, 2).imag();
  x(7) = m(1, 2).real();
  x(8) = m(1, 2).imag();
  return x;
}

void check_rates(const Vec3d& a) {
  for (int i = 0; i < 3; ++i) {
    if (!(a(i) >= 0.0)) {
      throw Error("negative_rate",
                  strfmt("dissipator rate a%d%d = %g is negative", i + 1,
                         i + 1, a(i)));
    }
  }
}

}  // namespace

Mat3 triplet_block(const Mat4& h) {
  if (max_abs(Mat4(h - h.adjoint())) > 1e-12) {
    throw Error("not_hermitian", "Hamiltonian must be Hermitian");
  }
  const auto b = triplet_states();
  Mat3 hq;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      hq(m, n) = b[m].dot(h * b[n]);
    }
  }
  return hq;
}

Mat9d hamiltonian_qrep(const Mat4& h) {
  const Mat3 hq = triplet_block(h);
  Mat9d rep;
  const cd unit_i(0.0, 1.0);
  for (int k = 0; k < 9; ++k) {
    Eigen::Matrix<double, 9, 1> e = Eigen::Matrix<double, 9, 1>::Zero();
    e(k) = 1.0;
    const Mat3 basis = from_components(e);
    const Mat3 dot = -unit_i * (hq * basis - basis * hq);
    rep.col(k) = to_components(dot);
  }
  return rep;
}

Mat9d dissipator_qrep(const Vec3d& a_diag) {
  check_rates(a_diag);
  const double a1 = a_diag(0), a2 = a_diag(1), a3 = a_diag(2);

  Mat9d rep = Mat9d::Zero();
  // Population exchange: channel a1 links (psi1, psi3), a2 links
  // (psi3, psi2), a3 links (psi1, psi2), each at rate 4a.
  rep(0, 0) = -4.0 * (a1 + a3);
  rep(0, 1) = 4.0 * a1;
  rep(0, 2) = 4.0 * a3;
  rep(1, 0) = 4.0 * a1;
  rep(1, 1) = -4.0 * (a1 + a2);
  rep(1, 2) = 4.0 * a2;
  rep(2, 0) = 4.0 * a3;
  rep(2, 1) = 4.0 * a2;
  rep(2, 2) = -4.0 * (a2 + a3);
  // Coherence decay, componentwise. The channel that links a pair damps
  // the imaginary part of its coherence four times faster than spectator
  // channels damp either part.
  rep(3, 3) = -2.0 * (a2 + a3);               // Re c01
  rep(4, 4) = -(8.0 * a1 + 2.0 * a2 + 2.0 * a3);  // Im c01
  rep(5, 5) = -2.0 * (a1 + a2);               // Re c02
  rep(6, 6) = -(2.0 * a1 + 2.0 * a2 + 8.0 * a3);  // Im c02
  rep(7, 7) = -(2.0 * a1 + 8.0 * a2 + 2.0 * a3);  // Re c12
  rep(8, 8) = -2.0 * (a1 + a3);               // Im c12
  return rep;
}

WclResult wcl_compatible(const Mat4& h, const Vec3d& a_diag) {
  check_rates(a_diag);
  const Mat9d h9 = hamiltonian_qrep(h);
  const Mat9d d9 = dissipator_qrep(a_diag);

  WclResult out;
  out.commutator_norm = max_abs(Mat9d(h9 * d9 - d9 * h9));
  out.threshold = 1e-12 * (max_abs(h9) * max_abs(d9) + 1.0);

  Mat3 block = Mat3::Zero();
  block.diagonal() = a_diag.cast<cd>();
  const auto k = KossakowskiMatrix::from_blocks(block, block, block);
  const Mat16 h16 = commutator_super(h);
  const Mat16 d16 = dissipator_super(k);
  out.commutator_norm_full = max_abs(Mat16(h16 * d16 - d16 * h16));
  out.threshold_full = 1e-12 * (max_abs(h16) * max_abs(d16) + 1.0);

  out.compatible = out.commutator_norm < out.threshold &&
                   out.commutator_norm_full < out.threshold_full;
  if (out.compatible) {
    return out;
  }

  // Diagnose which directions of h (in the Pauli product expansion) or
  // which rate anisotropy break the commutation.
  Eigen::Matrix4d coeff;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      coeff(i, j) = (Mat4(h * tensor_pauli(i, j))).trace().real() / 4.0;
    }
  }
  const double tol = 1e-9 * (1.0 + max_abs(h));
  for (int i = 1; i < 4; ++i) {
    const double asym = coeff(i, 0) - coeff(0, i);
    if (std::abs(asym) > tol) {
      out.offending.push_back(
          strfmt("asymmetric sigma_%d coupling %.3g", i, asym));
    }
  }
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      if (i != j && std::abs(coeff(i, j)) > tol) {
        out.offending.push_back(
            strfmt("cross correlation sigma_%d x sigma_%d %.3g", i, j,
                   coeff(i, j)));
      }
    }
  }
  const double iso =
      (coeff(1, 1) + coeff(2, 2) + coeff(3, 3)) / 3.0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(coeff(i, i) - iso) > tol) {
      out.offending.push_back(strfmt(
          "anisotropic exchange sigma_%d x sigma_%d %.3g", i, i,
          coeff(i, i) - iso));
    }
  }
  const double mean_rate = a_diag.mean();
  const double rate_spread =
      (a_diag.array() - mean_rate).abs().maxCoeff();
  if (rate_spread > 1e-9 * (1.0 + mean_rate)) {
    out.offending.push_back(
        strfmt("anisotropic rates, spread %.3g", rate_spread));
  }
  if (out.offending.empty()) {
    out.offending.push_back("unidentified incompatibility");
  }
  return out;
}

}  // namespace qfb
