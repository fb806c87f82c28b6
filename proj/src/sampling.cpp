#include "algroup/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace algroup {

namespace {

// Smallest singular value of the left-multiplication matrix; a floor on it
// bounds the norm of the inverse.
double min_singular(const AlgebraElement& a) {
  Eigen::JacobiSVD<Mat> svd(a.spec()->left_mul_matrix(a.coords()));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace

AlgebraElement random_algebra_element(const SpecPtr& spec, Rng& rng) {
  CVec v(spec->dim());
  for (int i = 0; i < spec->dim(); ++i) {
    if (spec->field() == Field::Real) {
      v(i) = Scalar(rng.uniform(-1.0, 1.0), 0.0);
    } else {
      v(i) = rng.complex_uniform();
    }
  }
  return AlgebraElement(spec, std::move(v));
}

AlgebraElement random_self_adjoint(const SpecPtr& spec, Rng& rng) {
  AlgebraElement a = random_algebra_element(spec, rng);
  return alg_scalar_mul(Scalar(0.5, 0.0), alg_add(a, star(a)));
}

AlgebraElement random_invertible(const SpecPtr& spec, Rng& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    AlgebraElement a = random_algebra_element(spec, rng);
    if (min_singular(a) >= 0.25) return a;
  }
  throw std::runtime_error("random_invertible: sampling did not converge");
}

namespace {

// Unitary factor of a random complex matrix.
Mat random_unitary(int n, Rng& rng) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_uniform();
  }
  Eigen::HouseholderQR<Mat> qr(g);
  return qr.householderQ();
}

}  // namespace

AlgebraElement random_balanced_invertible(const SpecPtr& spec, Rng& rng) {
  if (!spec->has_matrix_form() ||
      spec->dim() != spec->matrix_dim() * spec->matrix_dim()) {
    return random_invertible(spec, rng);
  }
  const int n = spec->matrix_dim();
  Mat d = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = Scalar(rng.uniform(0.8, 1.25), 0.0);
  // U d V has exactly the diagonal entries of d as singular values.
  Mat m = random_unitary(n, rng) * d * random_unitary(n, rng);
  return from_matrix(spec, m);
}

Mat random_sl2(Rng& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Mat m(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) m(i, j) = rng.complex_uniform();
    }
    Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det) >= 0.3) return m / std::sqrt(det);
  }
  throw std::runtime_error("random_sl2: sampling did not converge");
}

DElement random_d_element(const SpecPtr& spec, Rng& rng) {
  AlgebraElement shift = random_algebra_element(spec, rng);
  AlgebraElement left = random_invertible(spec, rng);
  return DElement(std::move(shift), std::move(left));
}

TElement random_t_element(const SpecPtr& spec, Rng& rng) {
  AlgebraElement shift = random_algebra_element(spec, rng);
  AlgebraElement left = random_invertible(spec, rng);
  AlgebraElement right = random_invertible(spec, rng);
  return TElement(std::move(shift), std::move(left), std::move(right));
}

StarDElement random_star_d_element(const SpecPtr& spec, Rng& rng) {
  AlgebraElement shift = random_self_adjoint(spec, rng);
  AlgebraElement left = random_invertible(spec, rng);
  return StarDElement(std::move(shift), std::move(left));
}

}  // namespace algroup
