#include "doctest.h"

#include <cmath>
#include <complex>

#include "qfb/entangle.hpp"
#include "qfb/evolve.hpp"
#include "qfb/feedback.hpp"
#include "qfb/stationary.hpp"
#include "test_util.hpp"

using namespace qfb;
using qfbtest::dist;
using qfbtest::error_code;

namespace {

double denom(double a, double f) {
  const double f2 = f * f, f4 = f2 * f2;
  return 36 * a * a * a * a + 60 * a * a * a * f2 +
         a * a * (21 * f4 + 4) + 2 * a * f2 * (f4 + 2) + f4;
}

/// Bell-basis matrix of the attractor, assembled from the published
/// quartic coefficient ratios (an independent route to the same state).
Mat4 bell_form(double tau, double a, double f) {
  const auto [c, rho] = faithful_state(a, f);
  const double f2 = f * f, f4 = f2 * f2, a2 = a * a, a3 = a2 * a,
               a4 = a3 * a;
  const double dn = denom(a, f) * (3.0 + 2.0 * c.R);
  const double qa =
      (36 * a4 + 72 * a3 * f2 + a2 * (23 * f4 + 4) + 2 * a * f2 * (f4 + 4) +
       f4) / dn;
  const double qb =
      (36 * a4 + 24 * a3 * f2 + a2 * (15 * f4 + 4) + 2 * a * f4 * f2 + f4) /
      dn;
  const double qc =
      (36 * a4 + 120 * a3 * f2 + a2 * (31 * f4 + 4) + 2 * a * f2 * (f4 + 4) +
       f4) / dn;
  const cd w = 2.0 * cd(c.M, -c.Lc) / (2.0 * c.R + 3.0);

  const double q = (3.0 + tau) / 4.0;
  Mat4 m = Mat4::Zero();
  m(0, 0) = q * qa;
  m(0, 1) = q * w;
  m(1, 0) = q * std::conj(w);
  m(1, 1) = q * qc;
  m(2, 2) = q * qb;
  m(3, 3) = (1.0 - tau) / 4.0;
  return m;
}

}  // namespace

TEST_CASE("faithful state coefficients at the rational point") {
  const auto [c, rho] = faithful_state(1.0, 1.0);
  CHECK(c.M == doctest::Approx(-19.0 / 32).epsilon(1e-14));
  CHECK(c.N == doctest::Approx(7.0 / 128).epsilon(1e-14));
  CHECK(c.R == doctest::Approx(23.0 / 128).epsilon(1e-14));
  CHECK(c.Lc == doctest::Approx(1.0 / 32).epsilon(1e-14));
  CHECK(denom(1.0, 1.0) == doctest::Approx(128.0));

  Eigen::SelfAdjointEigenSolver<Mat4> es(rho.m, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() > 0.0);

  // Strong-rate point, fixed reference decimals.
  const auto [c2, rho2] = faithful_state(10.0, 5.0);
  CHECK(c2.M == doctest::Approx(-0.617079554594984).epsilon(1e-12));
  CHECK(c2.N == doctest::Approx(0.0609401997404664).epsilon(1e-12));
  CHECK(c2.R == doctest::Approx(0.182963987926671).epsilon(1e-12));
  CHECK(c2.Lc == doctest::Approx(0.00286777410543372).epsilon(1e-12));

  CHECK(error_code([] { faithful_state(0.0, 1.0); }) == "non_positive_rate");
  CHECK(error_code([] { faithful_state(-2.0, 1.0); }) ==
        "non_positive_rate");
}

TEST_CASE("the faithful state is stationary and full rank") {
  for (double a : {0.5, 1.0, 10.0}) {
    for (double f : {0.0, 1.0, 5.0}) {
      const auto [c, rho] = faithful_state(a, f);
      const Liouvillian lio = symmetric_scenario({a, f, 1.0, 1.0});
      const double scale = 1.0 + max_abs(lio.matrix());
      CHECK(max_abs(lio.apply(rho.m)) < 1e-10 * scale);
      Eigen::SelfAdjointEigenSolver<Mat4> es(rho.m, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
  }
}

TEST_CASE("the generator kernel is two dimensional") {
  for (double f : {0.0, 1.0, 5.0}) {
    const Liouvillian lio = symmetric_scenario({1.0, f, 1.0, 1.0});
    const auto basis = kernel_basis(lio);
    REQUIRE(basis.size() == 2);

    // Every basis matrix is annihilated by the generator.
    for (const Mat4& b : basis)
      CHECK(max_abs(lio.apply(b)) < 1e-8);

    // The singlet projector and the faithful state both lie in the span.
    const auto in_span = [&](const Mat4& m) {
      Mat4 res = m;
      for (const Mat4& b : basis) {
        const cd coeff = (b.adjoint() * m).trace();
        res -= coeff * b;
      }
      return max_abs(res);
    };
    CHECK(in_span(catalog("bell4").m) < 1e-9);
    CHECK(in_span(faithful_state(1.0, f).second.m) < 1e-9);
  }
}

TEST_CASE("attractor manifold properties") {
  for (double a : {1.0, 10.0}) {
    for (double f : {0.0, 0.5, 5.0}) {
      const Liouvillian lio = symmetric_scenario({a, f, 1.0, 1.0});
      const double scale = 1.0 + max_abs(lio.matrix());
      for (double tau : {-3.0, -2.0, -1.0, 0.0, 0.5, 1.0}) {
        const AsymptoticState st = asymptotic_state(tau, a, f);
        CHECK(st.tau == tau);
        CHECK(tau_of(st.state.m) == doctest::Approx(tau).epsilon(1e-12));
        CHECK(max_abs(lio.apply(st.state.m)) < 1e-10 * scale);
        CHECK(dist(st.xstate.to_matrix(), st.state.m) < 1e-13);
      }
      // The singlet end of the manifold is the dark state itself.
      CHECK(dist(asymptotic_state(-3.0, a, f).state.m,
                 catalog("bell4").m) < 1e-12);
    }
  }
  CHECK(error_code([] { asymptotic_state(-3.01, 1.0, 1.0); }) ==
        "tau_out_of_range");
  CHECK(error_code([] { asymptotic_state(1.01, 1.0, 1.0); }) ==
        "tau_out_of_range");
  CHECK(error_code([] { asymptotic_state(0.0, 0.0, 1.0); }) ==
        "non_positive_rate");
}

TEST_CASE("propagation reaches the predicted attractor") {
  for (double f : {0.0, 0.5}) {
    const Liouvillian lio = symmetric_scenario({1.0, f, 1.0, 1.0});
    for (const char* name : {"rho1", "rho2", "bell2", "maximally_mixed"}) {
      const DensityMatrix rho = catalog(name);
      const DensityMatrix late = propagate(lio, rho, 60.0);
      const AsymptoticState st =
          asymptotic_state(tau_of(rho.m), 1.0, f);
      CHECK(dist(late.m, st.state.m) < 1e-8);
    }
    // The dark state is an exact fixed point.
    CHECK(dist(propagate(lio, catalog("bell4"), 5.0).m,
               catalog("bell4").m) < 1e-10);
  }
}

TEST_CASE("bell-basis form of the attractor from the coefficient route") {
  for (double tau : {-3.0, -1.0, 0.0, 1.0}) {
    for (double a : {1.0, 2.0, 10.0}) {
      for (double f : {0.3, 1.0, 5.0}) {
        const AsymptoticState st = asymptotic_state(tau, a, f);
        const TwoQubitOp bell = to_bell_basis(
            TwoQubitOp{st.state.m, Basis::computational});
        CHECK(dist(bell.m, bell_form(tau, a, f)) < 1e-12);
      }
    }
  }
}

TEST_CASE("asymptotic concurrence closed form") {
  const auto ref = asymptotic_concurrence(-1.0, 10.0, 5.0);
  CHECK(ref.D1 == doctest::Approx(0.115955921031).epsilon(1e-10));
  CHECK(ref.C == doctest::Approx(0.231911842063).epsilon(1e-10));
  CHECK(ref.D2 < 0.0);

  CHECK(asymptotic_concurrence(-1.0, 10.0, 0.0).C == doctest::Approx(0.0));
  // Unfed crossover sits exactly at tau = -1.
  CHECK(asymptotic_concurrence(-1.05, 1.0, 0.0).C > 0.0);
  CHECK(asymptotic_concurrence(-0.95, 1.0, 0.0).C == doctest::Approx(0.0));
  // The singlet endpoint is maximally entangled for every rate.
  for (double f : {0.0, 1.0, 5.0})
    CHECK(asymptotic_concurrence(-3.0, 10.0, f).C ==
          doctest::Approx(1.0).epsilon(1e-12));

  // Matches the state-based evaluation across the manifold.
  for (double tau = -3.0; tau <= 1.0; tau += 0.25) {
    for (double f : {0.0, 0.5, 5.0}) {
      const double closed = asymptotic_concurrence(tau, 10.0, f).C;
      const double spectral =
          concurrence(asymptotic_state(tau, 10.0, f).state);
      CHECK(std::abs(closed - spectral) < 1e-10);
    }
  }
}

TEST_CASE("feedback strength optimization") {
  const OptimalFeedback best = optimize_feedback(10.0, -1.0, 0.0, 8.0);
  CHECK(best.f_star > 5.0);
  CHECK(best.f_star < 6.0);
  CHECK(std::abs(best.f_star - 5.0326) < 1e-3);
  CHECK(best.c_star == doctest::Approx(0.231918534354).epsilon(1e-9));
  CHECK(best.c_star ==
        doctest::Approx(asymptotic_concurrence(-1.0, 10.0, best.f_star).C)
            .epsilon(1e-12));
  CHECK(best.c_star > asymptotic_concurrence(-1.0, 10.0, 5.0).C);

  const OptimalFeedback again = optimize_feedback(10.0, -1.0, 0.0, 8.0);
  CHECK(again.f_star == best.f_star);

  CHECK(error_code([] { optimize_feedback(10.0, -1.0, 2.0, 1.0); }) ==
        "empty_range");
}
