#include "qfb/stationary.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "qfb/numerics.hpp"
#include "qfb/qops.hpp"
#include "qfb/states.hpp"

namespace qfb {

namespace {

void check_rate(double a) {
  if (!(a > 0.0)) {
    throw Error("non_positive_rate",
                strfmt("stationary analysis needs a > 0, got a = %g", a));
  }
}

// Common denominator of the faithful-state coefficients.
double denom(double a, double f) {
  const double f2 = f * f, f4 = f2 * f2;
  return 36.0 * a * a * a * a + 60.0 * a * a * a * f2 +
         a * a * (21.0 * f4 + 4.0) + 2.0 * a * f2 * (f4 + 2.0) + f4;
}

}  // namespace

std::pair<FaithfulCoefficients, DensityMatrix> faithful_state(double a,
                                                              double f) {
  check_rate(a);
  const double f2 = f * f, f4 = f2 * f2;
  const double dn = denom(a, f);

  FaithfulCoefficients c;
  c.a = a;
  c.f = f;
  c.M = -2.0 * std::sqrt(a) * f *
        (18.0 * a * a * a + 15.0 * a * a * f2 + 2.0 * a * (f4 + 1.0) + f2) /
        dn;
  c.N = a * a * f2 * (6.0 * a + f2) / dn;
  c.R = a * f2 * (18.0 * a * a + 3.0 * a * f2 + 2.0) / dn;
  c.Lc = 4.0 * a * a * f2 / dn;

  const auto& ops = symmetric_ops();
  Mat4 m = 0.25 * (Mat4::Identity() + c.M * ops.Sigma[2] -
                   c.N * (ops.S[0][0] - ops.S[1][1]) + c.R * ops.S[2][2] -
                   c.Lc * ops.S[0][1]);
  return {c, validate(m)};
}

std::vector<Mat4> kernel_basis(const Liouvillian& lio) {
  Eigen::JacobiSVD<Mat16> svd(lio.matrix(), Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = 1e-10 * (sigma.size() > 0 ? sigma(0) : 0.0);
  std::vector<Mat4> basis;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) < cutoff || sigma(i) == 0.0) {
      basis.push_back(unvec(svd.matrixV().col(i)));
    }
  }
  return basis;
}

AsymptoticState asymptotic_state(double tau, double a, double f) {
  check_rate(a);
  if (!(tau >= -3.0 && tau <= 1.0)) {
    throw Error("tau_out_of_range",
                strfmt("correlation sum must lie in [-3, 1], got %g", tau));
  }
  const auto [c, rho0] = faithful_state(a, f);
  (void)rho0;

  const double t3 = tau + 3.0;
  const double g2 = 2.0 * c.R + 3.0;

  AsymptoticState out;
  out.tau = tau;
  out.coeffs.rho3 = c.M * t3 / g2;
  out.coeffs.rho12 = -c.Lc * t3 / g2;
  out.coeffs.rho11 = (-2.0 * c.N * t3 - 2.0 * c.R + tau) / (2.0 * g2);
  out.coeffs.rho22 = (2.0 * c.N * t3 - 2.0 * c.R + tau) / (2.0 * g2);
  out.coeffs.rho33 = (2.0 * c.R * (tau + 2.0) + tau) / (2.0 * g2);

  const auto& ops = symmetric_ops();
  Mat4 m = 0.25 * (Mat4::Identity() + out.coeffs.rho3 * ops.Sigma[2] +
                   out.coeffs.rho12 * ops.S[0][1] +
                   out.coeffs.rho11 * ops.S[0][0] +
                   out.coeffs.rho22 * ops.S[1][1] +
                   out.coeffs.rho33 * ops.S[2][2]);
  out.state = validate(m);
  out.xstate = xstate_cast(out.state);
  return out;
}

AsymptoticConcurrence asymptotic_concurrence(double tau, double a, double f) {
  check_rate(a);
  if (!(tau >= -3.0 && tau <= 1.0)) {
    throw Error("tau_out_of_range",
                strfmt("correlation sum must lie in [-3, 1], got %g", tau));
  }
  const auto [c, rho0] = faithful_state(a, f);
  (void)rho0;

  const double t3 = tau + 3.0;
  const double g2 = 2.0 * c.R + 3.0;
  const double one2r = 1.0 + 2.0 * c.R;

  AsymptoticConcurrence out;
  out.D1 = (2.0 * std::abs(tau - 2.0 * c.R) -
            t3 * std::sqrt(one2r * one2r - 4.0 * c.M * c.M)) /
           (4.0 * g2);
  out.D2 = (2.0 * t3 * std::sqrt(4.0 * c.N * c.N + c.Lc * c.Lc) -
            std::abs(tau * one2r - 3.0 + 2.0 * c.R)) /
           (4.0 * g2);
  out.C = 2.0 * std::max({0.0, out.D1, out.D2});
  return out;
}

OptimalFeedback optimize_feedback(double a, double tau, double f_lo,
                                  double f_hi) {
  check_rate(a);
  if (f_hi < f_lo) {
    throw Error("empty_range",
                strfmt("feedback range [%g, %g] is empty", f_lo, f_hi));
  }
  auto objective = [a, tau](double f) {
    return asymptotic_concurrence(tau, a, f).C;
  };
  ScalarMax best = golden_max(objective, f_lo, f_hi, 1e-5);
  return {best.x, best.value};
}

}  // namespace qfb
