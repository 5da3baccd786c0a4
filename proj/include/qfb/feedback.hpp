// Markovian homodyne-feedback corrections: the Kossakowski correction,
// the feedback Hamiltonian, the full feedback master-equation generator,
// and the symmetric two-qubit benchmark scenario.
#pragma once

#include "qfb/generator.hpp"

namespace qfb {

/// Feedback operator F = f.(sigma x I) + g.(I x sigma) with real local
/// coupling vectors, applied with detection efficiency eta.
struct FeedbackConfig {
  Vec3d f = Vec3d::Zero();
  Vec3d g = Vec3d::Zero();
  double eta = 1.0;
};

/// Matrix form of the feedback operator.
Mat4 feedback_op(const FeedbackConfig& fb);

/// The feedback-induced Kossakowski correction for monitored channel l1:
/// with c = (l; r) and d = (f; g),
///   K_tilde = (1/eta) d d^T + i (c d^T - d c+).
/// Hermitian but in general not PSD. Throws "eta_out_of_range" unless
/// 0 < eta <= 1.
KossakowskiMatrix feedback_kossakowski(const LindbladOp& l1,
                                       const FeedbackConfig& fb);

/// Quadratic form of the qubit-1 block of K_tilde:
///   <u|A~|u> = (1/eta) |<f|u>|^2 + 2 Im( conj(<f|u>) <l|u> ),
/// with Dirac brackets <x|u> = sum_i conj(x_i) u_i. Real by Hermiticity.
double atilde_quadratic_form(const LindbladOp& l1, const FeedbackConfig& fb,
                             const Vec3c& u);

/// Feedback correction to the Hamiltonian. The traceless part equals
/// (L+ F + F L)/2 exactly; the (dynamically inert) identity component is
/// normalized to sum_ij [Re(l_i) f_j + Re(r_i) g_j]. Throws "not_hermitian"
/// if F is not Hermitian.
Mat4 feedback_hamiltonian(const LindbladOp& l1, const Mat4& f_op);

/// Full feedback master-equation generator
///   -i[H + H_FB, .] + D[L1 - iF] + ((1-eta)/eta) D[F] + sum_{mu>=2} D[L_mu],
/// where L1 must be one Lindblad channel of K (the monitored one; by
/// convention the first extracted) and the remaining channels of K are held
/// untouched. The stored Kossakowski metadata is the total effective
/// coefficient matrix K + K_tilde, PSD by construction.
/// Throws "eta_out_of_range"; "not_psd" if K minus the monitored channel's
/// contribution is not PSD (i.e. L1 is not a channel of K).
Liouvillian feedback_liouvillian(const Mat4& h, const KossakowskiMatrix& k,
                                 const LindbladOp& l1,
                                 const FeedbackConfig& fb);

/// The symmetric benchmark scenario at ideal detection (eta = 1):
/// both qubits damped identically (Kossakowski blocks all a.I), the first
/// channel sqrt(a).Sigma_1 monitored, feedback f along sigma_2 on both
/// qubits, Hamiltonian H = gamma Sigma_3 + delta S.
struct SymmetricScenario {
  double a = 1;
  double f = 0;
  double gamma = 1;
  double delta = 0;
};

/// The scenario's building blocks, exposed so callers can rebuild variants
/// (e.g. non-ideal eta) through feedback_liouvillian.
struct ScenarioParts {
  Mat4 h;                  // gamma Sigma_3 + delta S (bare Hamiltonian)
  KossakowskiMatrix k;     // four identical a.I blocks
  LindbladOp monitored;    // l = r = (sqrt(a), 0, 0)
  FeedbackConfig fb;       // f = g = (0, f, 0), eta = 1
};
ScenarioParts symmetric_scenario_parts(const SymmetricScenario& sc);

/// Assembled scenario generator. Its Hamiltonian part is
/// gamma Sigma_3 + delta S + sqrt(a) f S_12 (the inert identity term of the
/// feedback Hamiltonian is dropped); its total Kossakowski matrix has all
/// four 3x3 blocks equal to
///   [ a         i sqrt(a) f  0 ]
///   [ -i sqrt(a) f  a + f^2  0 ]
///   [ 0         0            a ].
/// Throws "negative_rate" when a < 0.
Liouvillian symmetric_scenario(const SymmetricScenario& sc);

}  // namespace qfb
