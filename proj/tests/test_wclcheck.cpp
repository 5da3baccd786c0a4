#include "doctest.h"

#include <cmath>
#include <random>

#include "qfb/wclcheck.hpp"
#include "test_util.hpp"

using namespace qfb;
using qfbtest::dist;
using qfbtest::error_code;

namespace {

/// Triplet basis in the representation order: psi1, psi3, psi2.
std::array<Vec4c, 3> triplet() {
  return {bell_state(1), bell_state(3), bell_state(2)};
}

/// Embeds a triplet-sector matrix into the full two-qubit space.
Mat4 embed(const Mat3& t) {
  const auto b = triplet();
  Mat4 m = Mat4::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m += t(i, j) * (b[i] * b[j].adjoint());
  return m;
}

/// Hermitian triplet matrix of the k-th real component
/// (p0, p1, p2 | Re c01, Im c01 | Re c02, Im c02 | Re c12, Im c12).
Mat3 component(int k) {
  Mat3 t = Mat3::Zero();
  if (k < 3) {
    t(k, k) = 1.0;
    return t;
  }
  const int pair[6][2] = {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}};
  const int m = pair[k - 3][0], n = pair[k - 3][1];
  if ((k - 3) % 2 == 0) {
    t(m, n) = 1.0;
    t(n, m) = 1.0;
  } else {
    t(m, n) = cd(0, 1);
    t(n, m) = cd(0, -1);
  }
  return t;
}

/// Projects a 4x4 operator back onto the 9 real triplet components.
Eigen::Matrix<double, 9, 1> project(const Mat4& m) {
  const auto b = triplet();
  Eigen::Matrix<double, 9, 1> out;
  for (int i = 0; i < 3; ++i) out(i) = b[i].dot(m * b[i]).real();
  const cd c01 = b[0].dot(m * b[1]);
  const cd c02 = b[0].dot(m * b[2]);
  const cd c12 = b[1].dot(m * b[2]);
  out(3) = c01.real();
  out(4) = c01.imag();
  out(5) = c02.real();
  out(6) = c02.imag();
  out(7) = c12.real();
  out(8) = c12.imag();
  return out;
}

KossakowskiMatrix collective(const Vec3d& rates) {
  Mat3 block = Mat3::Zero();
  block.diagonal() = rates.cast<cd>();
  return KossakowskiMatrix::from_blocks(block, block, block);
}

}  // namespace

TEST_CASE("triplet restriction of symmetric operators") {
  // Sigma_3 swaps psi1 and psi2 with weight 2; the exchange term is a
  // scalar on the whole triplet.
  const Mat3 s3 = triplet_block(sigma_sym(3));
  Mat3 expected = Mat3::Zero();
  expected(0, 2) = 2.0;
  expected(2, 0) = 2.0;
  CHECK(dist(s3, expected) < 1e-14);

  CHECK(dist(triplet_block(s_total()), Mat3(2.0 * Mat3::Identity())) <
        1e-14);

  Mat4 nonherm = Mat4::Zero();
  nonherm(0, 1) = 1.0;
  CHECK(error_code([&] { triplet_block(nonherm); }) == "not_hermitian");
}

TEST_CASE("coherent part on the triplet sector, frozen entries") {
  SUBCASE("sigma_3") {
    const Mat9d h9 = hamiltonian_qrep(sigma_sym(3));
    Mat9d expected = Mat9d::Zero();
    expected(0, 6) = -4;
    expected(2, 6) = 4;
    expected(3, 8) = -2;
    expected(4, 7) = -2;
    expected(6, 0) = 2;
    expected(6, 2) = -2;
    expected(7, 4) = 2;
    expected(8, 3) = 2;
    CHECK(dist(h9, expected) < 1e-13);
  }
  SUBCASE("the 1-2 exchange") {
    const Mat9d h9 = hamiltonian_qrep(s_pair(1, 2));
    Mat9d expected = Mat9d::Zero();
    expected(0, 5) = 4;
    expected(2, 5) = -4;
    expected(3, 7) = 2;
    expected(4, 8) = -2;
    expected(5, 0) = -2;
    expected(5, 2) = 2;
    expected(7, 3) = -2;
    expected(8, 4) = 2;
    CHECK(dist(h9, expected) < 1e-13);
  }
  SUBCASE("the isotropic exchange is inert") {
    CHECK(max_abs(hamiltonian_qrep(s_total())) < 1e-13);
  }
}

TEST_CASE("dissipative part on the triplet sector") {
  SUBCASE("isotropic rates, frozen form") {
    const double a = 0.7;
    const Mat9d d9 = dissipator_qrep(Vec3d(a, a, a));
    Mat9d expected = Mat9d::Zero();
    expected.block<3, 3>(0, 0) =
        4.0 * a * (Eigen::Matrix3d::Ones() - 3.0 * Eigen::Matrix3d::Identity());
    const double decay[6] = {2, 6, 2, 6, 6, 2};
    for (int k = 0; k < 6; ++k) expected(3 + k, 3 + k) = -2.0 * a * decay[k];
    CHECK(dist(d9, expected) < 1e-13);
  }
  SUBCASE("general rates match the full dissipator") {
    for (const Vec3d& rates :
         {Vec3d(0.3, 0.7, 0.2), Vec3d(1.0, 0.0, 0.5), Vec3d(0.9, 0.9, 0.9)}) {
      const Mat9d d9 = dissipator_qrep(rates);
      const auto k = collective(rates);
      for (int col = 0; col < 9; ++col) {
        const Mat3 basis_elem = component(col);
        const Mat4 image = dissipator_apply(k, embed(basis_elem));
        // The triplet sector is invariant: nothing leaks to the singlet.
        const Vec4c psi4 = bell_state(4);
        CHECK(std::abs(psi4.dot(image * psi4)) < 1e-13);
        for (int i = 1; i <= 3; ++i)
          CHECK(std::abs(psi4.dot(image * bell_state(i))) < 1e-13);
        CHECK(dist(d9.col(col), project(image)) < 1e-12);
      }
    }
  }
  CHECK(error_code([] { dissipator_qrep(Vec3d(-0.1, 0.2, 0.3)); }) ==
        "negative_rate");
}

TEST_CASE("compatibility edge cases") {
  // Anything inside span{Sigma_1..3, S} with isotropic rates commutes.
  const Mat4 in_span = 1.3 * sigma_sym(3) + 0.4 * s_total() +
                       0.9 * sigma_sym(1) + 0.2 * sigma_sym(2);
  const WclResult iso = wcl_compatible(in_span, Vec3d(0.7, 0.7, 0.7));
  CHECK(iso.compatible);
  CHECK(iso.offending.empty());
  CHECK(iso.commutator_norm < iso.threshold);
  CHECK(iso.commutator_norm_full < iso.threshold_full);

  // The pure exchange term survives any diagonal rate choice.
  const WclResult exch =
      wcl_compatible(Mat4(0.8 * s_total()), Vec3d(0.3, 0.9, 0.1));
  CHECK(exch.compatible);

  // A rotation about axis 3 tolerates anisotropy along that axis only.
  CHECK(wcl_compatible(Mat4(0.8 * sigma_sym(3)), Vec3d(0.4, 0.4, 1.1))
            .compatible);
  const WclResult wrong_axis =
      wcl_compatible(Mat4(0.9 * sigma_sym(1)), Vec3d(0.4, 0.4, 1.1));
  CHECK_FALSE(wrong_axis.compatible);
  REQUIRE_FALSE(wrong_axis.offending.empty());
  CHECK(wrong_axis.offending.front().find("anisotropic rates") !=
        std::string::npos);

  // Local asymmetry breaks the collective structure.
  const Mat4 local = sigma_sym(3) + 0.3 * tensor_pauli(3, 0);
  const WclResult asym = wcl_compatible(local, Vec3d(0.5, 0.5, 0.5));
  CHECK_FALSE(asym.compatible);
  bool found = false;
  for (const auto& s : asym.offending)
    found = found || s.find("asymmetric sigma_3") != std::string::npos;
  CHECK(found);

  CHECK(error_code([] {
          Mat4 nonherm = Mat4::Zero();
          nonherm(1, 0) = 1.0;
          wcl_compatible(nonherm, Vec3d(1, 1, 1));
        }) == "not_hermitian");
}

TEST_CASE("a tiny off-span component is still resolved") {
  const Mat4 h = sigma_sym(3) + 0.5 * s_total() +
                 2e-6 * (s_pair(1, 1) - s_pair(2, 2));
  const WclResult res = wcl_compatible(h, Vec3d(0.7, 0.7, 0.7));
  CHECK_FALSE(res.compatible);
  CHECK(res.commutator_norm > res.threshold);
  CHECK(res.commutator_norm_full > res.threshold_full);
}

TEST_CASE("both representations agree on randomized draws") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unif(0.3, 1.2);
  std::uniform_real_distribution<double> sign(-1.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    Mat4 h = unif(rng) * sigma_sym(1) + unif(rng) * sigma_sym(2) +
             unif(rng) * sigma_sym(3) + unif(rng) * s_total();
    Vec3d rates(unif(rng), unif(rng), unif(rng));
    const bool iso = trial % 2 == 0;
    if (iso) {
      rates = Vec3d::Constant(unif(rng));
    } else if (trial % 4 == 1) {
      h += (sign(rng) < 0 ? -1.0 : 1.0) * unif(rng) * s_pair(1, 3);
      rates = Vec3d::Constant(unif(rng));
    }
    const WclResult res = wcl_compatible(h, rates);
    CHECK(res.compatible == (res.commutator_norm < res.threshold));
    CHECK(res.compatible ==
          (res.commutator_norm_full < res.threshold_full));
    CHECK(res.compatible == (iso && trial % 4 != 1));
  }
}
