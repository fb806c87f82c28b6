#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "algroup/rng.hpp"
#include "algroup/sampling.hpp"
#include "algroup/spacetime.hpp"
#include "oracles.hpp"

namespace {

using algroup::Mat;
using algroup::Scalar;
using algroup::SpinPoincareElement;
using algroup::Vec4;

oracle::M2 as_oracle(const Mat& m) {
  return oracle::m2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

oracle::V4 as_oracle(const Vec4& v) {
  return {v[0], v[1], v[2], v[3]};
}

constexpr double kCosh1 = 1.5430806348152437;
constexpr double kSinh1 = 1.1752011936438014;

}  // namespace

TEST_CASE("vector/matrix dictionary round trips and matches the reference") {
  algroup::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Vec4 v = Vec4::complex(rng.complex_uniform(), rng.complex_uniform(),
                           rng.complex_uniform(), rng.complex_uniform());
    Mat m = vec_to_mat(v);
    CHECK(oracle::max_abs_diff(as_oracle(m), oracle::from_vec(as_oracle(v))) <
          1e-14);
    Vec4 back = algroup::mat_to_vec(m);
    CHECK(residual(back, v) < 1e-14);
    CHECK(oracle::max_abs_diff(as_oracle(back),
                               oracle::to_vec(as_oracle(m))) < 1e-14);
  }
}

TEST_CASE("quadratic form equals the determinant: (1,2,3,4) -> -28") {
  Vec4 v = Vec4::real(1, 2, 3, 4);
  CHECK(algroup::mink_norm(v) == Scalar(-28, 0));
  CHECK(oracle::det(oracle::from_vec(as_oracle(v))) == Scalar(-28, 0));

  algroup::Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    Vec4 w = Vec4::complex(rng.complex_uniform(), rng.complex_uniform(),
                           rng.complex_uniform(), rng.complex_uniform());
    Scalar det = oracle::det(oracle::from_vec(as_oracle(w)));
    CHECK(std::abs(det - algroup::mink_norm(w)) < 1e-13);
  }
}

TEST_CASE("vec4 real flag and as_real validation") {
  Vec4 r = Vec4::real(1, 0, 0, 0);
  CHECK(r.real_only());
  Vec4 c = Vec4::complex(Scalar(1, 0.25), Scalar(0, 0), Scalar(0, 0),
                         Scalar(0, 0));
  CHECK_FALSE(c.real_only());
  CHECK_THROWS_AS(c.as_real(1e-9), std::domain_error);
  Vec4 dusty = Vec4::complex(Scalar(1, 1e-15), Scalar(2, 0), Scalar(3, 0),
                             Scalar(4, 0));
  Vec4 cleaned = dusty.as_real(1e-12);
  CHECK(cleaned.real_only());
  CHECK(cleaned[0] == Scalar(1, 0));
}

TEST_CASE("unit-rapidity boost sends (1,0,0,0) to (cosh 1, 0, 0, sinh 1)") {
  SpinPoincareElement boost = algroup::make_boost(3, 1.0);
  Vec4 image = apply_spin(boost, Vec4::real(1, 0, 0, 0));
  CHECK(std::abs(image[0] - Scalar(kCosh1, 0)) < 1e-15);
  CHECK(std::abs(image[1]) < 1e-15);
  CHECK(std::abs(image[2]) < 1e-15);
  CHECK(std::abs(image[3] - Scalar(kSinh1, 0)) < 1e-15);
  // Interval preservation: the image stays on the unit hyperboloid.
  CHECK(std::abs(algroup::mink_norm(image) - Scalar(1, 0)) < 1e-13);
}

TEST_CASE("boost matrix in the real cover has the textbook form") {
  algroup::LorentzMatrix lm =
      algroup::lorentz_from_sl2(algroup::make_boost(3, 1.0).rotor());
  Eigen::Matrix4d expect = Eigen::Matrix4d::Identity();
  expect(0, 0) = kCosh1;
  expect(0, 3) = kSinh1;
  expect(3, 0) = kSinh1;
  expect(3, 3) = kCosh1;
  CHECK((lm.matrix() - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("quarter-turn about axis 3 maps axis 1 to axis 2") {
  const double pi = std::acos(-1.0);
  algroup::LorentzMatrix lm =
      algroup::lorentz_from_sl2(algroup::make_rotation(3, pi / 2).rotor());
  // Column 1 is the image of the x direction.
  CHECK(std::abs(lm.matrix()(2, 1) - 1.0) < 1e-14);
  CHECK(std::abs(lm.matrix()(1, 1)) < 1e-14);
  CHECK(std::abs(lm.matrix()(0, 0) - 1.0) < 1e-14);
}

TEST_CASE("full turn gives the nontrivial kernel element -1") {
  const double pi = std::acos(-1.0);
  SpinPoincareElement full = algroup::make_rotation(1, 2 * pi);
  CHECK(algroup::residual(full.rotor(), Mat(-Mat::Identity(2, 2))) < 1e-14);
  // Its Lorentz image is the identity nonetheless.
  algroup::LorentzMatrix lm = algroup::lorentz_from_sl2(full.rotor());
  CHECK((lm.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("cover is a homomorphism and identifies sign pairs") {
  algroup::Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    Mat m1 = algroup::random_sl2(rng);
    Mat m2 = algroup::random_sl2(rng);
    Eigen::Matrix4d lhs = algroup::lorentz_from_sl2(Mat(m1 * m2)).matrix();
    Eigen::Matrix4d rhs = algroup::lorentz_from_sl2(m1).matrix() *
                          algroup::lorentz_from_sl2(m2).matrix();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() /
              (1.0 + lhs.cwiseAbs().maxCoeff()) <
          1e-12);
    Eigen::Matrix4d neg = algroup::lorentz_from_sl2(Mat(-m1)).matrix();
    CHECK((algroup::lorentz_from_sl2(m1).matrix() - neg).cwiseAbs().maxCoeff() ==
          0.0);
  }
}

TEST_CASE("lorentz_from_sl2 rejects non-unit determinants") {
  Mat two = Scalar(2, 0) * Mat::Identity(2, 2);
  CHECK_THROWS_AS(algroup::lorentz_from_sl2(two), std::domain_error);
}

TEST_CASE("improper or antichronous matrices are rejected") {
  Eigen::Matrix4d parity = Eigen::Matrix4d::Identity();
  parity(1, 1) = parity(2, 2) = parity(3, 3) = -1.0;  // det -1
  CHECK_THROWS_AS(algroup::LorentzMatrix{parity}, std::domain_error);

  Eigen::Matrix4d time_reversal = Eigen::Matrix4d::Identity();
  time_reversal(0, 0) = -1.0;  // det -1 and antichronous
  CHECK_THROWS_AS(algroup::LorentzMatrix{time_reversal}, std::domain_error);

  Eigen::Matrix4d pt = -Eigen::Matrix4d::Identity();  // det +1, antichronous
  CHECK_THROWS_AS(algroup::LorentzMatrix{pt}, std::domain_error);

  Eigen::Matrix4d stretch = Eigen::Matrix4d::Identity() * 2.0;
  CHECK_THROWS_AS(algroup::LorentzMatrix{stretch}, std::domain_error);

  CHECK_NOTHROW(algroup::LorentzMatrix{Eigen::Matrix4d::Identity()});
}

TEST_CASE("hermitian action preserves hermiticity and scales the form") {
  algroup::Rng rng(34);
  for (int t = 0; t < 30; ++t) {
    Mat m(2, 2);
    m << rng.complex_uniform(), rng.complex_uniform(), rng.complex_uniform(),
        rng.complex_uniform();
    Vec4 v = Vec4::real(rng.uniform(-1, 1), rng.uniform(-1, 1),
                        rng.uniform(-1, 1), rng.uniform(-1, 1));
    Mat image = algroup::mhm_action(m, vec_to_mat(v));
    CHECK(algroup::is_hermitian(image, 1e-12));
    Scalar det_m = oracle::det(as_oracle(m));
    Scalar lhs = oracle::det(as_oracle(image));
    Scalar rhs = Scalar(std::norm(det_m), 0) * algroup::mink_norm(v);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("complex orthogonal image: identity, metric, and the sign case") {
  Mat id2 = Mat::Identity(2, 2);
  CHECK(algroup::residual(algroup::so4c_from_pair(id2, id2),
                          Mat(Mat::Identity(4, 4))) < 1e-14);

  Mat g = Mat::Zero(4, 4);
  g(0, 0) = Scalar(1, 0);
  g(1, 1) = g(2, 2) = g(3, 3) = Scalar(-1, 0);

  algroup::Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    Mat l = algroup::random_sl2(rng);
    Mat r = algroup::random_sl2(rng);
    Mat o = algroup::so4c_from_pair(l, r);
    CHECK(algroup::max_abs(Mat(o.transpose() * g * o - g)) /
              (1.0 + algroup::max_abs(o)) <
          1e-12);
  }

  // det l / det r = -1 flips the sign of the preserved form.
  Mat l = to_matrix(algroup::sigma(1));  // det -1
  Mat o = algroup::so4c_from_pair(l, id2);
  CHECK(algroup::max_abs(Mat(o.transpose() * g * o + g)) < 1e-13);

  // Other determinant ratios are rejected.
  Mat two = Scalar(2, 0) * id2;
  CHECK_THROWS_AS(algroup::so4c_from_pair(two, id2), std::domain_error);
}

TEST_CASE("restricting the pair action to (m, (m^dagger)^-1) is the real cover") {
  algroup::Rng rng(36);
  for (int t = 0; t < 30; ++t) {
    Mat m = algroup::random_sl2(rng);
    Mat dual = m.adjoint().inverse();
    Mat o = algroup::so4c_from_pair(m, dual);
    Eigen::Matrix4d l = algroup::lorentz_from_sl2(m).matrix();
    CHECK(algroup::residual(o, Mat(l.cast<Scalar>())) < 1e-12);
    CHECK(algroup::max_abs(Mat(o.imag().cast<Scalar>())) < 1e-12);
  }
}

TEST_CASE("spin pairs compose like the affine group they represent") {
  algroup::Rng rng(37);
  SpinPoincareElement id = algroup::spin_identity();
  for (int t = 0; t < 30; ++t) {
    SpinPoincareElement x(
        to_matrix(random_self_adjoint(algroup::pauli_spec(), rng)),
        algroup::random_sl2(rng));
    SpinPoincareElement y(
        to_matrix(random_self_adjoint(algroup::pauli_spec(), rng)),
        algroup::random_sl2(rng));
    SpinPoincareElement z(
        to_matrix(random_self_adjoint(algroup::pauli_spec(), rng)),
        algroup::random_sl2(rng));
    CHECK(residual(compose_spin(compose_spin(x, y), z),
                   compose_spin(x, compose_spin(y, z))) < 1e-12);
    CHECK(residual(compose_spin(x, id), x) < 1e-13);
    CHECK(residual(compose_spin(id, x), x) < 1e-13);
    CHECK(residual(compose_spin(x, invert_spin(x)), id) < 1e-11);
    CHECK(algroup::residual(spin_matrix_rep(compose_spin(x, y)),
                            Mat(spin_matrix_rep(x) * spin_matrix_rep(y))) <
          1e-11);
    // Applying the pair matches applying its triple over the algebra.
    CHECK(algroup::residual(spin_matrix_rep(x),
                            matrix_rep_T(embed_spin(x))) < 1e-12);
  }
}

TEST_CASE("spin action interoperates with the four-vector dictionary") {
  algroup::Rng rng(38);
  for (int t = 0; t < 30; ++t) {
    SpinPoincareElement x(
        to_matrix(random_self_adjoint(algroup::pauli_spec(), rng)),
        algroup::random_sl2(rng));
    Vec4 v = Vec4::real(rng.uniform(-1, 1), rng.uniform(-1, 1),
                        rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec4 image = apply_spin(x, v);
    CHECK(image.real_only());
    oracle::M2 direct = oracle::add(
        oracle::mul(oracle::mul(as_oracle(x.rotor()),
                                oracle::from_vec(as_oracle(v))),
                    oracle::adjoint(as_oracle(x.rotor()))),
        as_oracle(x.shift()));
    CHECK(oracle::max_abs_diff(as_oracle(vec_to_mat(image)), direct) < 1e-12);
  }
  CHECK_THROWS_AS(apply_spin(algroup::spin_identity(),
                             Vec4::complex(Scalar(0, 1), Scalar(0, 0),
                                           Scalar(0, 0), Scalar(0, 0))),
                  std::invalid_argument);
}

TEST_CASE("spin constructors validate their arguments") {
  Mat id2 = Mat::Identity(2, 2);
  Mat not_hermitian(2, 2);
  not_hermitian << Scalar(0, 1), Scalar(0, 0), Scalar(0, 0), Scalar(0, 0);
  CHECK_THROWS_AS(SpinPoincareElement(not_hermitian, id2),
                  std::invalid_argument);
  Mat two = Scalar(2, 0) * id2;
  CHECK_THROWS_AS(SpinPoincareElement(Mat(Mat::Zero(2, 2)), two),
                  std::domain_error);
  CHECK_THROWS_AS(algroup::make_boost(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(algroup::make_rotation(4, 1.0), std::invalid_argument);
}
