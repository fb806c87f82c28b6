#include <stdexcept>

#include <doctest.h>

#include "algroup/groups.hpp"
#include "algroup/rng.hpp"
#include "algroup/sampling.hpp"
#include "oracles.hpp"

namespace {

using algroup::AlgebraElement;
using algroup::CVec;
using algroup::DElement;
using algroup::Mat;
using algroup::Scalar;
using algroup::SpecPtr;
using algroup::TElement;

oracle::M2 as_oracle(const Mat& m) {
  return oracle::m2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

oracle::DPair as_oracle(const DElement& x) {
  return {as_oracle(to_matrix(x.shift())), as_oracle(to_matrix(x.left()))};
}

oracle::TTriple as_oracle(const TElement& x) {
  return {as_oracle(to_matrix(x.shift())), as_oracle(to_matrix(x.left())),
          as_oracle(to_matrix(x.right()))};
}

AlgebraElement scalar_elem(const SpecPtr& spec, Scalar z) {
  CVec v(1);
  v << z;
  return AlgebraElement(spec, std::move(v));
}

}  // namespace

TEST_CASE("one-sided composition over scalars: (1,2)(3,4) = (7,8)") {
  SpecPtr m1 = algroup::matrix_algebra_spec(1);
  DElement x(scalar_elem(m1, Scalar(1, 0)), scalar_elem(m1, Scalar(2, 0)));
  DElement y(scalar_elem(m1, Scalar(3, 0)), scalar_elem(m1, Scalar(4, 0)));
  DElement xy = compose_D(x, y);
  CHECK(xy.shift().coords()(0) == Scalar(7, 0));
  CHECK(xy.left().coords()(0) == Scalar(8, 0));
}

TEST_CASE("one-sided inverse over scalars: (6,3)^-1 = (-2, 1/3)") {
  SpecPtr m1 = algroup::matrix_algebra_spec(1);
  DElement x(scalar_elem(m1, Scalar(6, 0)), scalar_elem(m1, Scalar(3, 0)));
  DElement inv = invert_D(x);
  CHECK(std::abs(inv.shift().coords()(0) - Scalar(-2, 0)) < 1e-15);
  CHECK(std::abs(inv.left().coords()(0) - Scalar(1.0 / 3.0, 0)) < 1e-15);
  CHECK(residual(compose_D(x, inv), d_identity(m1)) < 1e-15);
}

TEST_CASE("one-sided inverse over the pauli algebra: (sigma1, sigma3)") {
  DElement x(algroup::sigma(1), algroup::sigma(3));
  DElement inv = invert_D(x);
  // sigma3^-1 = sigma3 and -sigma3 sigma1 = -i sigma2, coords (0,0,-i,0).
  CHECK(residual(inv.left(), algroup::sigma(3)) < 1e-13);
  CHECK(residual(inv.shift(),
                 alg_scalar_mul(Scalar(0, -1), algroup::sigma(2))) < 1e-13);
  CHECK(residual(compose_D(inv, x), d_identity(x.spec())) < 1e-13);
}

TEST_CASE("one-sided operations agree with the reference arithmetic") {
  algroup::Rng rng(21);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 40; ++t) {
    DElement x = random_d_element(spec, rng);
    DElement y = random_d_element(spec, rng);
    AlgebraElement a = random_algebra_element(spec, rng);

    oracle::DPair want = oracle::d_compose(as_oracle(x), as_oracle(y));
    DElement got = compose_D(x, y);
    CHECK(oracle::max_abs_diff(as_oracle(got).b, want.b) < 1e-11);
    CHECK(oracle::max_abs_diff(as_oracle(got).l, want.l) < 1e-11);

    oracle::DPair want_inv = oracle::d_invert(as_oracle(x));
    DElement got_inv = invert_D(x);
    CHECK(oracle::max_abs_diff(as_oracle(got_inv).b, want_inv.b) < 1e-10);
    CHECK(oracle::max_abs_diff(as_oracle(got_inv).l, want_inv.l) < 1e-10);

    oracle::M2 want_apply = oracle::d_apply(as_oracle(x), as_oracle(to_matrix(a)));
    CHECK(oracle::max_abs_diff(as_oracle(to_matrix(apply_D(x, a))), want_apply) <
          1e-11);
  }
}

TEST_CASE("two-sided composition over scalars: (1,2,4)(1,1,1) = (3/2,2,4)") {
  SpecPtr m1 = algroup::matrix_algebra_spec(1);
  TElement x(scalar_elem(m1, Scalar(1, 0)), scalar_elem(m1, Scalar(2, 0)),
             scalar_elem(m1, Scalar(4, 0)));
  TElement y(scalar_elem(m1, Scalar(1, 0)), scalar_elem(m1, Scalar(1, 0)),
             scalar_elem(m1, Scalar(1, 0)));
  TElement xy = compose_T(x, y);
  CHECK(std::abs(xy.shift().coords()(0) - Scalar(1.5, 0)) < 1e-15);
  CHECK(xy.left().coords()(0) == Scalar(2, 0));
  CHECK(xy.right().coords()(0) == Scalar(4, 0));

  TElement inv = invert_T(x);
  CHECK(std::abs(inv.shift().coords()(0) - Scalar(-2, 0)) < 1e-15);
  CHECK(std::abs(inv.left().coords()(0) - Scalar(0.5, 0)) < 1e-15);
  CHECK(std::abs(inv.right().coords()(0) - Scalar(0.25, 0)) < 1e-15);
}

TEST_CASE("two-sided operations agree with the reference arithmetic") {
  algroup::Rng rng(22);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 40; ++t) {
    TElement x = random_t_element(spec, rng);
    TElement y = random_t_element(spec, rng);
    AlgebraElement a = random_algebra_element(spec, rng);

    oracle::TTriple want = oracle::t_compose(as_oracle(x), as_oracle(y));
    CHECK(oracle::max_abs_diff(as_oracle(compose_T(x, y)), want) < 1e-10);

    oracle::TTriple want_inv = oracle::t_invert(as_oracle(x));
    CHECK(oracle::max_abs_diff(as_oracle(invert_T(x)), want_inv) < 1e-9);

    oracle::M2 want_apply = oracle::t_apply(as_oracle(x), as_oracle(to_matrix(a)));
    CHECK(oracle::max_abs_diff(as_oracle(to_matrix(apply_T(x, a))), want_apply) <
          1e-10);

    oracle::TTriple want_star = oracle::t_star(as_oracle(x));
    CHECK(oracle::max_abs_diff(as_oracle(star_T(x)), want_star) < 1e-10);
  }
}

TEST_CASE("group constructors reject non-invertible parts") {
  AlgebraElement singular = algroup::sigma(0) + algroup::sigma(3);
  CHECK_THROWS_AS(DElement(algroup::sigma(1), singular), std::domain_error);
  CHECK_THROWS_AS(TElement(algroup::sigma(1), algroup::sigma(0), singular),
                  std::domain_error);
  CHECK_THROWS_AS(algroup::StarDElement(algroup::sigma(1), singular),
                  std::domain_error);
}

TEST_CASE("block representation of the one-sided group") {
  algroup::Rng rng(23);
  SpecPtr spec = algroup::pauli_spec();
  DElement x = random_d_element(spec, rng);
  Mat rep = matrix_rep_D(x);
  REQUIRE(rep.rows() == 4);
  CHECK(algroup::residual(Mat(rep.block(0, 0, 2, 2)), to_matrix(x.left())) == 0.0);
  CHECK(algroup::residual(Mat(rep.block(0, 2, 2, 2)), to_matrix(x.shift())) == 0.0);
  CHECK(algroup::max_abs(Mat(rep.block(2, 0, 2, 2))) == 0.0);
  CHECK(algroup::residual(Mat(rep.block(2, 2, 2, 2)),
                          Mat(Mat::Identity(2, 2))) == 0.0);
  for (int t = 0; t < 25; ++t) {
    DElement a = random_d_element(spec, rng);
    DElement b = random_d_element(spec, rng);
    CHECK(algroup::residual(matrix_rep_D(compose_D(a, b)),
                            Mat(matrix_rep_D(a) * matrix_rep_D(b))) < 1e-11);
  }
}

TEST_CASE("block representation of the two-sided group") {
  algroup::Rng rng(24);
  SpecPtr spec = algroup::pauli_spec();
  TElement x = random_t_element(spec, rng);
  Mat rep = matrix_rep_T(x);
  CHECK(algroup::residual(Mat(rep.block(0, 0, 2, 2)), to_matrix(x.left())) == 0.0);
  CHECK(algroup::residual(Mat(rep.block(0, 2, 2, 2)),
                          to_matrix(x.shift() * x.right())) < 1e-13);
  CHECK(algroup::residual(Mat(rep.block(2, 2, 2, 2)), to_matrix(x.right())) == 0.0);
  for (int t = 0; t < 25; ++t) {
    TElement a = random_t_element(spec, rng);
    TElement b = random_t_element(spec, rng);
    CHECK(algroup::residual(matrix_rep_T(compose_T(a, b)),
                            Mat(matrix_rep_T(a) * matrix_rep_T(b))) < 1e-10);
  }
}

TEST_CASE("affine representation acts as the affine map on coordinates") {
  algroup::Rng rng(25);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 25; ++t) {
    DElement x = random_d_element(spec, rng);
    AlgebraElement a = random_algebra_element(spec, rng);
    Mat rep = affine_rep_D(x);
    CVec homo(5);
    homo.head(4) = a.coords();
    homo(4) = Scalar(1, 0);
    CVec image = rep * homo;
    CHECK(algroup::residual(Mat(image.head(4)), Mat(apply_D(x, a).coords())) <
          1e-12);
    CHECK(std::abs(image(4) - Scalar(1, 0)) == 0.0);

    DElement y = random_d_element(spec, rng);
    CHECK(algroup::residual(affine_rep_D(compose_D(x, y)),
                            Mat(affine_rep_D(x) * affine_rep_D(y))) < 1e-11);
  }
}

TEST_CASE("adjoint of the left part is left multiplication: sigma3 . sigma1") {
  AlgebraElement got = adjoint_D(algroup::sigma(3), algroup::sigma(1));
  // sigma3 sigma1 = i sigma2, coords (0, 0, i, 0).
  CHECK(residual(got, alg_scalar_mul(Scalar(0, 1), algroup::sigma(2))) < 1e-14);
  CHECK_THROWS_AS(adjoint_D(algroup::sigma(0) + algroup::sigma(3),
                            algroup::sigma(1)),
                  std::domain_error);
}

TEST_CASE("star of a triple is an involutive automorphism") {
  algroup::Rng rng(26);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 30; ++t) {
    TElement x = random_t_element(spec, rng);
    TElement y = random_t_element(spec, rng);
    CHECK(residual(star_T(star_T(x)), x) < 1e-10);
    CHECK(residual(star_T(compose_T(x, y)), compose_T(star_T(x), star_T(y))) <
          1e-9);
    CHECK(residual(star_T(invert_T(x)), invert_T(star_T(x))) < 1e-9);
  }
}

TEST_CASE("shift, left, and right operators embed as homomorphisms") {
  algroup::Rng rng(27);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 25; ++t) {
    AlgebraElement b1 = random_algebra_element(spec, rng);
    AlgebraElement b2 = random_algebra_element(spec, rng);
    CHECK(residual(compose_T(shift_operator(b1), shift_operator(b2)),
                   shift_operator(b1 + b2)) < 1e-13);

    AlgebraElement l1 = random_invertible(spec, rng);
    AlgebraElement l2 = random_invertible(spec, rng);
    CHECK(residual(compose_T(left_operator(l1), left_operator(l2)),
                   left_operator(l1 * l2)) < 1e-13);

    // The inverse twist makes the right embedding covariant rather than
    // contravariant.
    CHECK(residual(compose_T(right_operator(l1), right_operator(l2)),
                   right_operator(l1 * l2)) < 1e-13);

    AlgebraElement a = random_algebra_element(spec, rng);
    CHECK(residual(apply_T(right_operator(l1), a), a * invert(l1)) < 1e-11);
    CHECK(residual(apply_T(right_operator(l1, algroup::RightTwist::Star), a),
                   a * star(l1)) < 1e-11);
  }
}

TEST_CASE("star-fixed pairs embed as star-fixed triples") {
  algroup::Rng rng(28);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 25; ++t) {
    algroup::StarDElement x = random_star_d_element(spec, rng);
    TElement e = embed_star_D(x);
    CHECK(residual(star_T(e), e) < 1e-10);
    // Action is a -> G a G^* + H.
    AlgebraElement a = random_algebra_element(spec, rng);
    CHECK(residual(apply_T(e, a), x.left() * a * star(x.left()) + x.shift()) <
          1e-10);
    // Self-adjoint shifts map self-adjoint arguments to self-adjoint images.
    AlgebraElement h = random_self_adjoint(spec, rng);
    AlgebraElement image = apply_T(e, h);
    CHECK(residual(image, star(image)) < 1e-10);
  }
}

TEST_CASE("star-fixed constructor rejects a non-self-adjoint shift") {
  AlgebraElement bad = alg_scalar_mul(Scalar(0, 1), algroup::sigma(1));
  CHECK_THROWS_AS(make_star_D(bad, algroup::sigma(0)), std::invalid_argument);
  CHECK_NOTHROW(make_star_D(algroup::sigma(1), algroup::sigma(0)));
}

TEST_CASE("center equivalence detects joint scalar rescalings") {
  algroup::Rng rng(29);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 25; ++t) {
    TElement x = random_t_element(spec, rng);
    Scalar c = rng.complex_uniform(2.0);
    if (std::abs(c) < 0.2) c += Scalar(1.0, 0.0);
    TElement y(x.shift(), alg_scalar_mul(c, x.left()),
               alg_scalar_mul(c, x.right()));
    CHECK(algroup::center_equiv(x, y));
    CHECK(algroup::center_equiv(y, x));

    // Scaling only one side is not a central move.
    TElement only_left(x.shift(), alg_scalar_mul(Scalar(2, 0), x.left()),
                       x.right());
    CHECK_FALSE(algroup::center_equiv(x, only_left));
  }
  // Different shifts are never equivalent.
  TElement a(algroup::sigma(1), algroup::sigma(0), algroup::sigma(0));
  TElement b(algroup::sigma(2), algroup::sigma(0), algroup::sigma(0));
  CHECK_FALSE(algroup::center_equiv(a, b));
}

TEST_CASE("embedding the one-sided group into triples preserves products") {
  algroup::Rng rng(30);
  SpecPtr spec = algroup::pauli_spec();
  for (int t = 0; t < 25; ++t) {
    DElement x = random_d_element(spec, rng);
    DElement y = random_d_element(spec, rng);
    CHECK(residual(embed_D(compose_D(x, y)),
                   compose_T(embed_D(x), embed_D(y))) < 1e-12);
    AlgebraElement a = random_algebra_element(spec, rng);
    CHECK(residual(apply_T(embed_D(x), a), apply_D(x, a)) < 1e-12);
  }
}
