#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "qfb/feedback.hpp"
#include "qfb/generator.hpp"
#include "qfb/numerics.hpp"
#include "qfb/states.hpp"
#include "test_util.hpp"

using namespace qfb;
using qfbtest::dist;
using qfbtest::error_code;

namespace {

Mat4 random_hermitian4(unsigned seed, double scale) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = scale * cd(unif(rng), unif(rng));
  return 0.5 * (m + m.adjoint()).eval();
}

KossakowskiMatrix random_psd_kossakowski(unsigned seed, double scale) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = scale * cd(unif(rng), unif(rng));
  return KossakowskiMatrix(Mat6(m * m.adjoint()));
}

DensityMatrix random_state(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = cd(unif(rng), unif(rng));
  Mat4 p = m * m.adjoint();
  p /= p.trace().real();
  return validate(p);
}

}  // namespace

TEST_CASE("coupling operators are the local pauli family") {
  for (int i = 1; i <= 3; ++i) {
    CHECK(dist(coupling_op(i), tensor_pauli(i, 0)) == 0.0);
    CHECK(dist(coupling_op(i + 3), tensor_pauli(0, i)) == 0.0);
  }
  CHECK(error_code([] { coupling_op(0); }) == "index_out_of_range");
  CHECK(error_code([] { coupling_op(7); }) == "index_out_of_range");
}

TEST_CASE("kossakowski matrix construction and blocks") {
  Mat6 bad = Mat6::Zero();
  bad(0, 1) = 1.0;
  CHECK(error_code([&] { KossakowskiMatrix k{bad}; }) == "not_hermitian");

  Mat3 a = Mat3::Identity();
  Mat3 b;
  b << cd(0.1), cd(0, 0.2), cd(0), cd(0, -0.2), cd(0.3), cd(0), cd(0), cd(0),
      cd(0.4);
  Mat3 c = 2.0 * Mat3::Identity();
  const auto k = KossakowskiMatrix::from_blocks(a, b, c);
  CHECK(dist(k.A(), a) == 0.0);
  CHECK(dist(k.B(), b) == 0.0);
  CHECK(dist(k.C(), c) == 0.0);
  CHECK(dist(Mat3(k.entries().block<3, 3>(3, 0)), Mat3(b.adjoint())) == 0.0);

  CHECK(random_psd_kossakowski(11, 0.5).is_psd());
  Mat6 neg = Mat6::Identity();
  neg(5, 5) = -1.0;
  CHECK_FALSE(KossakowskiMatrix(neg).is_psd());
}

TEST_CASE("dissipator preserves trace and hermiticity") {
  const auto k = random_psd_kossakowski(3, 0.7);
  for (unsigned seed : {10u, 11u, 12u}) {
    const Mat4 rho = random_state(seed).m;
    const Mat4 out = dissipator_apply(k, rho);
    CHECK(std::abs(out.trace()) < 1e-13);
    CHECK(dist(out, Mat4(out.adjoint())) < 1e-13);
  }
}

TEST_CASE("rank-one dissipator matches the single-channel form") {
  const Vec3c l(cd(0.4, 0.1), cd(0, -0.3), cd(0.9));
  const Vec3c r(cd(-0.2), cd(0.5, 0.5), cd(0, 0.1));
  const LindbladOp op = make_lindblad(l, r);
  const auto k = kossakowski_of(op);
  const Mat4 rho = random_state(21).m;
  CHECK(dist(dissipator_apply(k, rho), dissipator_single(op.op, rho)) <
        1e-13);
}

TEST_CASE("lindblad extraction is descending and reconstructs the matrix") {
  Mat3 a = Mat3::Zero();
  a.diagonal() << cd(3.0), cd(1.0), cd(0.5);
  Mat3 c = Mat3::Zero();
  c.diagonal() << cd(0.2), cd(0.1), cd(0.0);
  const auto k = KossakowskiMatrix::from_blocks(a, Mat3::Zero(), c);

  const auto ops = lindblad_extract(k);
  CHECK(ops.size() == 5);  // the zero eigenvalue is dropped

  double prev = std::numeric_limits<double>::infinity();
  Mat6 sum = Mat6::Zero();
  for (const auto& op : ops) {
    const double weight =
        op.l.squaredNorm() + op.r.squaredNorm();  // the eigenvalue
    CHECK(weight <= prev + 1e-12);
    prev = weight;
    sum += kossakowski_of(op).entries();
  }
  CHECK(dist(sum, k.entries()) < 1e-12);
  CHECK(ops.front().l.squaredNorm() + ops.front().r.squaredNorm() ==
        doctest::Approx(3.0).epsilon(1e-12));

  // The cached matrix form agrees with the coefficient expansion.
  for (const auto& op : ops)
    CHECK(dist(op.op, make_lindblad(op.l, op.r).op) == 0.0);

  Mat6 neg = Mat6::Identity();
  neg(0, 0) = -1.0;
  CHECK(error_code([&] { lindblad_extract(KossakowskiMatrix(neg)); }) ==
        "not_psd");
}

TEST_CASE("scenario coefficient matrix has the expected spectrum") {
  // All four blocks a.I: eigenvalues (2a, 2a, 2a, 0, 0, 0).
  const double a = 0.8;
  const auto parts = symmetric_scenario_parts({a, 0.0, 1.0, 0.0});
  Eigen::SelfAdjointEigenSolver<Mat6> es(parts.k.entries(),
                                         Eigen::EigenvaluesOnly);
  for (int i = 0; i < 3; ++i) {
    CHECK(es.eigenvalues()(i) == doctest::Approx(0.0));
    CHECK(es.eigenvalues()(i + 3) == doctest::Approx(2.0 * a));
  }
  CHECK(lindblad_extract(parts.k).size() == 3);
}

TEST_CASE("vectorization round-trips and matches the superoperators") {
  const Mat4 rho = random_state(5).m;
  CHECK(dist(unvec(vec(rho)), rho) == 0.0);

  const Mat4 h = random_hermitian4(8, 1.2);
  const auto k = random_psd_kossakowski(9, 0.6);

  CHECK(dist(unvec(Vec16(commutator_super(h) * vec(rho))),
             Mat4(cd(0, -1) * (h * rho - rho * h))) < 1e-13);
  CHECK(dist(unvec(Vec16(dissipator_super(k) * vec(rho))),
             dissipator_apply(k, rho)) < 1e-12);
}

TEST_CASE("liouvillian assembly agrees with direct application") {
  const Mat4 h = random_hermitian4(14, 0.9);
  const auto k = random_psd_kossakowski(15, 0.8);
  const Liouvillian lio = liouvillian(h, k);

  CHECK(dist(lio.hamiltonian(), h) == 0.0);
  CHECK(dist(lio.kossakowski().entries(), k.entries()) == 0.0);

  for (unsigned seed : {31u, 32u}) {
    const Mat4 rho = random_state(seed).m;
    const Mat4 direct =
        cd(0, -1) * (h * rho - rho * h) + dissipator_apply(k, rho);
    CHECK(dist(lio.apply(rho), direct) < 1e-12);
  }

  // Trace preservation: vec(I) is a left null vector.
  const Vec16 id_vec = vec(Mat4(Mat4::Identity()));
  CHECK((id_vec.adjoint() * lio.matrix()).cwiseAbs().maxCoeff() < 1e-12);

  Mat4 nonherm = Mat4::Zero();
  nonherm(0, 1) = 1.0;
  CHECK(error_code([&] { liouvillian(nonherm, k); }) == "not_hermitian");
}

TEST_CASE("the generated semigroup is completely positive") {
  const Mat4 h = random_hermitian4(40, 1.0);
  const auto k = random_psd_kossakowski(41, 0.5);
  const Liouvillian lio = liouvillian(h, k);

  // Choi matrix of the identity map is the maximally entangled projector.
  const Mat16 cid = choi_matrix(Mat16::Identity());
  CHECK(std::abs(cid.trace() - cd(1.0)) < 1e-14);
  Eigen::SelfAdjointEigenSolver<Mat16> esid(cid, Eigen::EigenvaluesOnly);
  CHECK(esid.eigenvalues().maxCoeff() == doctest::Approx(1.0));
  CHECK(esid.eigenvalues()(14) == doctest::Approx(0.0));

  for (double t : {0.1, 0.6, 2.0}) {
    const Mat16 map = expm(Mat16(t * lio.matrix()));
    const Mat16 choi = choi_matrix(map);
    CHECK(dist(choi, Mat16(choi.adjoint())) < 1e-11);
    Eigen::SelfAdjointEigenSolver<Mat16> es(choi, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
    CHECK(std::abs(choi.trace() - cd(1.0)) < 1e-11);
  }
}
