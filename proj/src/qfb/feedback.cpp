#include "qfb/feedback.hpp"

#include <cmath>

namespace qfb {

namespace {

using Vec6c = Eigen::Matrix<cd, 6, 1>;

Vec6c stack(const Vec3c& top, const Vec3c& bottom) {
  Vec6c v;
  v.head<3>() = top;
  v.tail<3>() = bottom;
  return v;
}

void check_eta(double eta) {
  if (!(eta > 0.0) || eta > 1.0)
    throw Error("eta_out_of_range",
                strfmt("eta = %g outside (0, 1]", eta));
}

}  // namespace

Mat4 feedback_op(const FeedbackConfig& fb) {
  Mat4 f = Mat4::Zero();
  for (int i = 1; i <= 3; ++i) {
    f += fb.f(i - 1) * tensor_pauli(i, 0);
    f += fb.g(i - 1) * tensor_pauli(0, i);
  }
  return f;
}

KossakowskiMatrix feedback_kossakowski(const LindbladOp& l1,
                                       const FeedbackConfig& fb) {
  check_eta(fb.eta);
  const Vec6c c = stack(l1.l, l1.r);
  const Vec6c d = stack(fb.f.cast<cd>(), fb.g.cast<cd>());
  const cd i(0.0, 1.0);
  const Mat6 ktilde = (1.0 / fb.eta) * (d * d.transpose()) +
                      i * (c * d.transpose() - d * c.adjoint());
  return KossakowskiMatrix(ktilde);
}

double atilde_quadratic_form(const LindbladOp& l1, const FeedbackConfig& fb,
                             const Vec3c& u) {
  check_eta(fb.eta);
  const cd fu = fb.f.cast<cd>().dot(u);  // <f|u>, f real
  const cd lu = l1.l.dot(u);             // <l|u>, Eigen dot conjugates l
  return std::norm(fu) / fb.eta + 2.0 * std::imag(std::conj(fu) * lu);
}

Mat4 feedback_hamiltonian(const LindbladOp& l1, const Mat4& f_op) {
  const double herm = max_abs(f_op - f_op.adjoint());
  if (herm > 1e-12)
    throw Error("not_hermitian",
                strfmt("feedback operator: max |F - F^dag| = %.3e exceeds 1e-12",
                       herm));
  const Mat4 g = 0.5 * (l1.op.adjoint() * f_op + f_op * l1.op);

  // Identity component normalized to the free-index sum over the local
  // coupling coefficients; it is inert under commutators either way.
  double fsum = 0, gsum = 0;
  for (int j = 1; j <= 3; ++j) {
    fsum += (f_op * tensor_pauli(j, 0)).trace().real() / 4.0;
    gsum += (f_op * tensor_pauli(0, j)).trace().real() / 4.0;
  }
  const double scalar = l1.l.real().sum() * fsum + l1.r.real().sum() * gsum;

  return g - (g.trace() / 4.0) * Mat4::Identity() +
         scalar * Mat4::Identity();
}

Liouvillian feedback_liouvillian(const Mat4& h, const KossakowskiMatrix& k,
                                 const LindbladOp& l1,
                                 const FeedbackConfig& fb) {
  check_eta(fb.eta);
  const double herm = max_abs(h - h.adjoint());
  if (herm > 1e-12)
    throw Error("not_hermitian",
                strfmt("Hamiltonian: max |H - H^dag| = %.3e exceeds 1e-12",
                       herm));

  // Channels of K other than the monitored one.
  const Vec6c c = stack(l1.l, l1.r);
  const Mat6 rest = k.entries() - (c * c.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Mat6> es(rest, Eigen::EigenvaluesOnly);
  const double rest_min = es.eigenvalues().minCoeff();
  if (rest_min < -1e-10)
    throw Error("not_psd",
                strfmt("monitored operator is not a channel of K: residual "
                       "Kossakowski eigenvalue %.3e below floor -1e-10",
                       rest_min));
  const KossakowskiMatrix k_rest(0.5 * (rest + rest.adjoint()).eval());

  const Mat4 f_op = feedback_op(fb);
  const Mat4 h_fb = feedback_hamiltonian(l1, f_op);

  // Diagonal (Lindblad-form) assembly of the averaged feedback generator.
  const cd i(0.0, 1.0);
  const LindbladOp fed =
      make_lindblad(l1.l - i * fb.f.cast<cd>(), l1.r - i * fb.g.cast<cd>());
  Mat16 gen = commutator_super(h + h_fb);
  gen += dissipator_super(kossakowski_of(fed));
  if (fb.eta < 1.0) {
    const LindbladOp fchan =
        make_lindblad(fb.f.cast<cd>(), fb.g.cast<cd>());
    gen += ((1.0 - fb.eta) / fb.eta) *
           dissipator_super(kossakowski_of(fchan));
  }
  for (const LindbladOp& op : lindblad_extract(k_rest))
    gen += dissipator_super(kossakowski_of(op));

  // Metadata carries the total effective coefficient matrix K + K_tilde.
  const Mat6 total =
      k.entries() + feedback_kossakowski(l1, fb).entries();
  return Liouvillian(gen, h + h_fb, KossakowskiMatrix(total));
}

ScenarioParts symmetric_scenario_parts(const SymmetricScenario& sc) {
  if (sc.a < 0)
    throw Error("negative_rate", strfmt("rate a = %g must be >= 0", sc.a));
  ScenarioParts parts;
  parts.h = sc.gamma * sigma_sym(3) + sc.delta * s_total();
  const Mat3 a_block = sc.a * Mat3::Identity();
  parts.k = KossakowskiMatrix::from_blocks(a_block, a_block, a_block);
  const double ra = std::sqrt(sc.a);
  parts.monitored = make_lindblad(Vec3c(ra, 0, 0), Vec3c(ra, 0, 0));
  parts.fb.f = Vec3d(0, sc.f, 0);
  parts.fb.g = Vec3d(0, sc.f, 0);
  parts.fb.eta = 1.0;
  return parts;
}

Liouvillian symmetric_scenario(const SymmetricScenario& sc) {
  const ScenarioParts parts = symmetric_scenario_parts(sc);
  const Liouvillian full =
      feedback_liouvillian(parts.h, parts.k, parts.monitored, parts.fb);
  // Same generator matrix, with the inert identity part of the feedback
  // Hamiltonian dropped from the stored metadata.
  const Mat4 h_sc = parts.h + std::sqrt(sc.a) * sc.f * s_pair(1, 2);
  return Liouvillian(full.matrix(), h_sc, full.kossakowski());
}

}  // namespace qfb
