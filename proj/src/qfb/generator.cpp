#include "qfb/generator.hpp"

#include <cmath>

namespace qfb {

namespace {

Mat16 kron44(const Mat4& a, const Mat4& b) {
  Mat16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

void check_hermitian(const Eigen::MatrixXcd& m, const char* what) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-12)
    throw Error("not_hermitian",
                strfmt("%s: max |M - M^dag| = %.3e exceeds 1e-12", what, dev));
}

}  // namespace

KossakowskiMatrix::KossakowskiMatrix(const Mat6& k) : k_(k) {
  check_hermitian(k_, "Kossakowski matrix");
}

KossakowskiMatrix KossakowskiMatrix::from_blocks(const Mat3& a, const Mat3& b,
                                                 const Mat3& c) {
  Mat6 k;
  k.block<3, 3>(0, 0) = a;
  k.block<3, 3>(0, 3) = b;
  k.block<3, 3>(3, 0) = b.adjoint();
  k.block<3, 3>(3, 3) = c;
  return KossakowskiMatrix(k);
}

bool KossakowskiMatrix::is_psd() const {
  Eigen::SelfAdjointEigenSolver<Mat6> es(k_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -1e-10;
}

LindbladOp make_lindblad(const Vec3c& l, const Vec3c& r) {
  LindbladOp op;
  op.l = l;
  op.r = r;
  op.op = Mat4::Zero();
  for (int i = 1; i <= 3; ++i) {
    op.op += l(i - 1) * tensor_pauli(i, 0);
    op.op += r(i - 1) * tensor_pauli(0, i);
  }
  return op;
}

Mat4 coupling_op(int alpha) {
  if (alpha < 1 || alpha > 6)
    throw Error("index_out_of_range",
                strfmt("coupling index %d outside 1..6", alpha));
  return alpha <= 3 ? tensor_pauli(alpha, 0) : tensor_pauli(0, alpha - 3);
}

Mat4 dissipator_apply(const KossakowskiMatrix& k, const Mat4& rho) {
  Mat4 out = Mat4::Zero();
  for (int a = 1; a <= 6; ++a) {
    const Mat4 fa = coupling_op(a);
    for (int b = 1; b <= 6; ++b) {
      const cd kab = k.entries()(a - 1, b - 1);
      if (kab == cd(0)) continue;
      const Mat4 fb = coupling_op(b);
      const Mat4 fbfa = fb * fa;
      out += kab * (fa * rho * fb - 0.5 * (fbfa * rho + rho * fbfa));
    }
  }
  return out;
}

Mat4 dissipator_single(const Mat4& l, const Mat4& rho) {
  const Mat4 ll = l.adjoint() * l;
  return l * rho * l.adjoint() - 0.5 * (ll * rho + rho * ll);
}

std::vector<LindbladOp> lindblad_extract(const KossakowskiMatrix& k) {
  Eigen::SelfAdjointEigenSolver<Mat6> es(k.entries());
  const auto& vals = es.eigenvalues();
  const double max_val = vals.maxCoeff();
  const double min_val = vals.minCoeff();
  if (min_val < -1e-10)
    throw Error("not_psd",
                strfmt("Kossakowski eigenvalue %.3e below floor -1e-10", min_val));

  const double cutoff = 1e-12 * std::max(max_val, 0.0);
  std::vector<LindbladOp> ops;
  // Descending order so the dominant channel comes first.
  for (int mu = 5; mu >= 0; --mu) {
    const double lambda = vals(mu);
    if (lambda <= cutoff) continue;
    const auto col = es.eigenvectors().col(mu);
    const double s = std::sqrt(lambda);
    ops.push_back(make_lindblad(s * col.head<3>(), s * col.tail<3>()));
  }
  return ops;
}

KossakowskiMatrix kossakowski_of(const LindbladOp& op) {
  Eigen::Matrix<cd, 6, 1> c;
  c.head<3>() = op.l;
  c.tail<3>() = op.r;
  return KossakowskiMatrix(c * c.adjoint());
}

Mat4 Liouvillian::apply(const Mat4& rho) const { return unvec(m_ * vec(rho)); }

Liouvillian liouvillian(const Mat4& h, const KossakowskiMatrix& k) {
  check_hermitian(h, "Hamiltonian");
  return Liouvillian(commutator_super(h) + dissipator_super(k), h, k);
}

Vec16 vec(const Mat4& m) {
  return Eigen::Map<const Vec16>(m.data());  // Eigen is column-major
}

Mat4 unvec(const Vec16& v) { return Eigen::Map<const Mat4>(v.data()); }

Mat16 commutator_super(const Mat4& h) {
  const cd i(0.0, 1.0);
  const Mat4 id = Mat4::Identity();
  return -i * (kron44(id, h) - kron44(h.transpose(), id));
}

Mat16 dissipator_super(const KossakowskiMatrix& k) {
  const Mat4 id = Mat4::Identity();
  Mat16 out = Mat16::Zero();
  for (int a = 1; a <= 6; ++a) {
    const Mat4 fa = coupling_op(a);
    for (int b = 1; b <= 6; ++b) {
      const cd kab = k.entries()(a - 1, b - 1);
      if (kab == cd(0)) continue;
      const Mat4 fb = coupling_op(b);
      const Mat4 fbfa = fb * fa;
      out += kab * (kron44(fb.transpose(), fa) -
                    0.5 * kron44(id, fbfa) -
                    0.5 * kron44(fbfa.transpose(), id));
    }
  }
  return out;
}

Mat16 choi_matrix(const Mat16& superop) {
  // (S kron id) applied to the maximally entangled state of two copies.
  Mat16 c = Mat16::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Mat4 eij = Mat4::Zero();
      eij(i, j) = 1;
      const Mat4 mapped = unvec(superop * vec(eij));
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          c(4 * p + i, 4 * q + j) = 0.25 * mapped(p, q);
    }
  }
  return c;
}

}  // namespace qfb
