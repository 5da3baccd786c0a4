#include "qfb/qops.hpp"

#include <array>

namespace qfb {

namespace {

std::array<Mat2, 4> make_paulis() {
  std::array<Mat2, 4> s;
  const cd i(0.0, 1.0);
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -i, i, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

Mat4 make_bell_matrix() {
  Mat4 u;
  for (int k = 0; k < 4; ++k) u.col(k) = bell_state(k + 1);
  return u;
}

}  // namespace

const Mat2& pauli(int i) {
  static const std::array<Mat2, 4> s = make_paulis();
  if (i < 0 || i > 3)
    throw Error("index_out_of_range",
                strfmt("pauli index %d outside 0..3", i));
  return s[static_cast<size_t>(i)];
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4 tensor_pauli(int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3)
    throw Error("index_out_of_range",
                strfmt("tensor_pauli indices (%d,%d) outside 0..3", i, j));
  return kron2(pauli(i), pauli(j));
}

Mat4 sigma_sym(int i) {
  if (i < 1 || i > 3)
    throw Error("index_out_of_range",
                strfmt("sigma_sym index %d outside 1..3", i));
  return tensor_pauli(i, 0) + tensor_pauli(0, i);
}

Mat4 s_pair(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw Error("index_out_of_range",
                strfmt("s_pair indices (%d,%d) outside 1..3", i, j));
  return tensor_pauli(i, j) + tensor_pauli(j, i);
}

Mat4 s_total() { return s_pair(1, 1) + s_pair(2, 2) + s_pair(3, 3); }

Mat4 proj_p() { return 0.25 * (Mat4::Identity() - 0.5 * s_total()); }

Mat4 proj_q() { return Mat4::Identity() - proj_p(); }

SymmetricOps symmetric_ops() {
  SymmetricOps ops;
  for (int i = 1; i <= 3; ++i) ops.Sigma[i - 1] = sigma_sym(i);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) ops.S[i - 1][j - 1] = s_pair(i, j);
  ops.Stot = s_total();
  ops.P = proj_p();
  ops.Q = proj_q();
  return ops;
}

Vec4c bell_state(int k) {
  const double inv = 1.0 / std::sqrt(2.0);
  Vec4c v = Vec4c::Zero();
  switch (k) {
    case 1: v(0) = inv; v(3) = inv; break;
    case 2: v(0) = inv; v(3) = -inv; break;
    case 3: v(1) = inv; v(2) = inv; break;
    case 4: v(1) = inv; v(2) = -inv; break;
    default:
      throw Error("index_out_of_range",
                  strfmt("bell_state index %d outside 1..4", k));
  }
  return v;
}

const Mat4& bell_matrix() {
  static const Mat4 u = make_bell_matrix();
  return u;
}

TwoQubitOp to_bell_basis(const TwoQubitOp& op) {
  if (op.basis != Basis::computational)
    throw Error("wrong_basis", "to_bell_basis expects a computational-basis operator");
  const Mat4& u = bell_matrix();
  return {u.adjoint() * op.m * u, Basis::bell};
}

TwoQubitOp from_bell_basis(const TwoQubitOp& op) {
  if (op.basis != Basis::bell)
    throw Error("wrong_basis", "from_bell_basis expects a bell-basis operator");
  const Mat4& u = bell_matrix();
  return {u * op.m * u.adjoint(), Basis::computational};
}

Mat4 partial_transpose(const Mat4& rho) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) =
          rho.block<2, 2>(2 * i, 2 * j).transpose();
  return out;
}

Mat4 swap_qubits(const Mat4& op) {
  static const Mat4 swap = [] {
    Mat4 s = Mat4::Zero();
    s(0, 0) = s(3, 3) = 1;
    s(1, 2) = s(2, 1) = 1;
    return s;
  }();
  return swap * op * swap;
}

FanoCoefficients fano_decompose(const Mat4& rho) {
  FanoCoefficients c;
  c.r00 = rho.trace().real();
  for (int i = 1; i <= 3; ++i) {
    c.ri0(i - 1) = (rho * tensor_pauli(i, 0)).trace().real();
    c.r0i(i - 1) = (rho * tensor_pauli(0, i)).trace().real();
    for (int j = 1; j <= 3; ++j)
      c.rij(i - 1, j - 1) = (rho * tensor_pauli(i, j)).trace().real();
  }
  return c;
}

Mat4 fano_recompose(const FanoCoefficients& c) {
  Mat4 out = c.r00 * Mat4::Identity();
  for (int i = 1; i <= 3; ++i) {
    out += c.ri0(i - 1) * tensor_pauli(i, 0);
    out += c.r0i(i - 1) * tensor_pauli(0, i);
    for (int j = 1; j <= 3; ++j)
      out += c.rij(i - 1, j - 1) * tensor_pauli(i, j);
  }
  return 0.25 * out;
}

double tau_of(const Mat4& rho) {
  double t = 0;
  for (int i = 1; i <= 3; ++i)
    t += (rho * tensor_pauli(i, i)).trace().real();
  return t;
}

}  // namespace qfb
