#include "algroup/spacetime.hpp"

#include <cmath>
#include <stdexcept>

namespace algroup {

namespace {

const Eigen::Matrix4d& minkowski_metric() {
  static const Eigen::Matrix4d g = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
  }();
  return g;
}

void require_2x2(const Mat& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw std::invalid_argument(std::string(what) + ": expected a 2x2 matrix");
  }
  require_finite(m, what);
}

Scalar det2(const Mat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Mat inv2(const Mat& m, const char* what) {
  Scalar d = det2(m);
  if (std::abs(d) < kSingularTol * (1.0 + max_abs(m))) {
    throw std::domain_error(std::string(what) + ": matrix is singular");
  }
  Mat r(2, 2);
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r / d;
}

}  // namespace

Vec4::Vec4(std::array<Scalar, 4> v, bool real_only)
    : v_(v), real_only_(real_only) {
  for (Scalar z : v_) {
    if (!is_finite(z)) throw std::invalid_argument("Vec4: components must be finite");
  }
}

Vec4 Vec4::real(double v0, double v1, double v2, double v3) {
  return Vec4({Scalar(v0, 0.0), Scalar(v1, 0.0), Scalar(v2, 0.0),
               Scalar(v3, 0.0)},
              true);
}

Vec4 Vec4::complex(Scalar v0, Scalar v1, Scalar v2, Scalar v3) {
  return Vec4({v0, v1, v2, v3}, false);
}

Scalar Vec4::operator[](int i) const {
  if (i < 0 || i > 3) throw std::out_of_range("Vec4: index out of range");
  return v_[static_cast<std::size_t>(i)];
}

Vec4 Vec4::as_real(double tol) const {
  double worst = 0.0;
  for (Scalar z : v_) worst = std::max(worst, std::abs(z.imag()));
  if (worst > tol) {
    throw std::domain_error("Vec4::as_real: imaginary parts exceed tolerance");
  }
  return Vec4::real(v_[0].real(), v_[1].real(), v_[2].real(), v_[3].real());
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
  if (a.real_only() && b.real_only()) {
    return Vec4::real((a[0] + b[0]).real(), (a[1] + b[1]).real(),
                      (a[2] + b[2]).real(), (a[3] + b[3]).real());
  }
  return Vec4::complex(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]);
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
  if (a.real_only() && b.real_only()) {
    return Vec4::real((a[0] - b[0]).real(), (a[1] - b[1]).real(),
                      (a[2] - b[2]).real(), (a[3] - b[3]).real());
  }
  return Vec4::complex(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]);
}

double residual(const Vec4& a, const Vec4& b) {
  double scale = 0.0;
  double diff = 0.0;
  for (int i = 0; i < 4; ++i) {
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  return diff / (1.0 + scale);
}

const Mat& pauli_matrix(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("pauli_matrix: index out of range");
  return pauli_spec()->matrix_basis()[static_cast<std::size_t>(i)];
}

Mat vec_to_mat(const Vec4& v) {
  Mat m = Mat::Zero(2, 2);
  for (int i = 0; i < 4; ++i) m += v[i] * pauli_matrix(i);
  return m;
}

Vec4 mat_to_vec(const Mat& m) {
  require_2x2(m, "mat_to_vec");
  std::array<Scalar, 4> v{};
  for (int i = 0; i < 4; ++i) {
    v[static_cast<std::size_t>(i)] = (pauli_matrix(i) * m).trace() / 2.0;
  }
  return Vec4::complex(v[0], v[1], v[2], v[3]);
}

Scalar mink_norm(const Vec4& v) {
  return v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
}

Mat mhm_action(const Mat& m, const Mat& h) {
  require_2x2(m, "mhm_action: m");
  require_2x2(h, "mhm_action: h");
  return m * h * m.adjoint();
}

LorentzMatrix::LorentzMatrix(const Eigen::Matrix4d& m, double tol) : m_(m) {
  if (!m_.allFinite()) {
    throw std::invalid_argument("LorentzMatrix: entries must be finite");
  }
  const Eigen::Matrix4d& g = minkowski_metric();
  double scale = 1.0 + m_.cwiseAbs().maxCoeff();
  if ((m_.transpose() * g * m_ - g).cwiseAbs().maxCoeff() > tol * scale * scale) {
    throw std::domain_error("LorentzMatrix: metric is not preserved");
  }
  if (std::abs(m_.determinant() - 1.0) > tol * scale * scale) {
    throw std::domain_error("LorentzMatrix: determinant must be +1");
  }
  if (m_(0, 0) < 1.0 - tol) {
    throw std::domain_error("LorentzMatrix: time orientation must be preserved");
  }
}

double LorentzMatrix::metric_residual() const {
  const Eigen::Matrix4d& g = minkowski_metric();
  return (m_.transpose() * g * m_ - g).cwiseAbs().maxCoeff();
}

LorentzMatrix lorentz_from_sl2(const Mat& m, double tol) {
  require_2x2(m, "lorentz_from_sl2");
  if (std::abs(det2(m) - Scalar(1.0, 0.0)) > tol * (1.0 + max_abs(m))) {
    throw std::domain_error("lorentz_from_sl2: determinant must be 1");
  }
  Eigen::Matrix4d out;
  for (int j = 0; j < 4; ++j) {
    // Column j: coordinates of M sigma_j M^dagger, Hermitian, so the
    // decomposition is real up to rounding noise.
    Vec4 col = mat_to_vec(m * pauli_matrix(j) * m.adjoint());
    for (int i = 0; i < 4; ++i) out(i, j) = col[i].real();
  }
  return LorentzMatrix(out, tol);
}

Mat so4c_from_pair(const Mat& l, const Mat& r, double tol) {
  require_2x2(l, "so4c_from_pair: l");
  require_2x2(r, "so4c_from_pair: r");
  Scalar dl = det2(l);
  Scalar dr = det2(r);
  if (std::abs(dr) < kSingularTol * (1.0 + max_abs(r))) {
    throw std::domain_error("so4c_from_pair: r is singular");
  }
  Scalar ratio = dl / dr;
  if (std::min(std::abs(ratio - Scalar(1.0, 0.0)),
               std::abs(ratio + Scalar(1.0, 0.0))) > tol) {
    throw std::domain_error("so4c_from_pair: det(l)/det(r) must be +-1");
  }
  Mat rinv = inv2(r, "so4c_from_pair: r");
  Mat out = Mat::Zero(4, 4);
  for (int j = 0; j < 4; ++j) {
    Vec4 col = mat_to_vec(l * pauli_matrix(j) * rinv);
    for (int i = 0; i < 4; ++i) out(i, j) = col[i];
  }
  return out;
}

SpinPoincareElement::SpinPoincareElement(const Mat& h, const Mat& lambda,
                                         double tol)
    : h_(h), lambda_(lambda) {
  require_2x2(h_, "SpinPoincareElement: h");
  require_2x2(lambda_, "SpinPoincareElement: lambda");
  if (!is_hermitian(h_, tol)) {
    throw std::invalid_argument("SpinPoincareElement: shift must be Hermitian");
  }
  if (std::abs(det2(lambda_) - Scalar(1.0, 0.0)) > tol * (1.0 + max_abs(lambda_))) {
    throw std::domain_error("SpinPoincareElement: det(lambda) must be 1");
  }
}

SpinPoincareElement spin_identity() {
  return SpinPoincareElement(Mat::Zero(2, 2), Mat::Identity(2, 2));
}

SpinPoincareElement compose_spin(const SpinPoincareElement& x,
                                 const SpinPoincareElement& y) {
  return SpinPoincareElement(x.shift() + x.rotor() * y.shift() * x.rotor().adjoint(),
                             x.rotor() * y.rotor());
}

SpinPoincareElement invert_spin(const SpinPoincareElement& x) {
  Mat linv = inv2(x.rotor(), "invert_spin");
  return SpinPoincareElement(-(linv * x.shift() * linv.adjoint()), linv);
}

Mat spin_matrix_rep(const SpinPoincareElement& x) {
  Mat dual = inv2(x.rotor().adjoint(), "spin_matrix_rep");
  Mat m = Mat::Zero(4, 4);
  m.block(0, 0, 2, 2) = x.rotor();
  m.block(0, 2, 2, 2) = x.shift() * dual;
  m.block(2, 2, 2, 2) = dual;
  return m;
}

Vec4 apply_spin(const SpinPoincareElement& x, const Vec4& v) {
  if (!v.real_only()) {
    throw std::invalid_argument("apply_spin: vector must be real");
  }
  Mat image = x.rotor() * vec_to_mat(v) * x.rotor().adjoint() + x.shift();
  // The image of a Hermitian matrix is Hermitian, so the coordinates are
  // real up to rounding noise.
  return mat_to_vec(image).as_real(1e-12 * (1.0 + max_abs(image)));
}

SpinPoincareElement make_boost(int axis, double rapidity) {
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("make_boost: axis must be 1, 2, or 3");
  }
  Mat lambda = std::cosh(rapidity / 2.0) * pauli_matrix(0) +
               std::sinh(rapidity / 2.0) * pauli_matrix(axis);
  return SpinPoincareElement(Mat::Zero(2, 2), lambda);
}

SpinPoincareElement make_rotation(int axis, double angle) {
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("make_rotation: axis must be 1, 2, or 3");
  }
  Mat lambda = std::cos(angle / 2.0) * pauli_matrix(0) -
               Scalar(0.0, 1.0) * std::sin(angle / 2.0) * pauli_matrix(axis);
  return SpinPoincareElement(Mat::Zero(2, 2), lambda);
}

TElement embed_spin(const SpinPoincareElement& x) {
  SpecPtr spec = pauli_spec();
  AlgebraElement lambda = from_matrix(spec, x.rotor());
  return TElement(from_matrix(spec, x.shift()), lambda, invert(star(lambda)));
}

double residual(const SpinPoincareElement& x, const SpinPoincareElement& y) {
  return std::max(residual(x.shift(), y.shift()),
                  residual(x.rotor(), y.rotor()));
}

}  // namespace algroup
