#pragma once

#include <array>

#include "algroup/algebra.hpp"
#include "algroup/groups.hpp"

namespace algroup {

// Conventions used throughout this module:
//   * metric signature (+, -, -, -), g = diag(1, -1, -1, -1);
//   * sigma_2 = [[0, -i], [i, 0]];
//   * make_rotation(3, theta) maps sigma_1 to cos(theta) sigma_1 +
//     sin(theta) sigma_2 (right-handed rotation about the axis).

// Four-vector with complex components.  A vector carries a real flag when it
// is known to lie in R^4; real-flagged vectors have exactly zero imaginary
// parts.
class Vec4 {
 public:
  static Vec4 real(double v0, double v1, double v2, double v3);
  static Vec4 complex(Scalar v0, Scalar v1, Scalar v2, Scalar v3);

  Scalar operator[](int i) const;
  bool real_only() const { return real_only_; }

  // Validates that imaginary parts are below tol (absolute) and drops them.
  Vec4 as_real(double tol = kDefaultTol) const;

 private:
  Vec4(std::array<Scalar, 4> v, bool real_only);
  std::array<Scalar, 4> v_;
  bool real_only_;
};

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
double residual(const Vec4& a, const Vec4& b);

// sigma_0 .. sigma_3 as 2 x 2 matrices.
const Mat& pauli_matrix(int i);

// v -> sum_i v_i sigma_i = [[v0+v3, v1-i v2], [v1+i v2, v0-v3]].
Mat vec_to_mat(const Vec4& v);

// Inverse decomposition, v_i = tr(sigma_i M) / 2; result is complex-flagged.
Vec4 mat_to_vec(const Mat& m);

// Quadratic form v0^2 - v1^2 - v2^2 - v3^2; equals det(vec_to_mat(v)).
Scalar mink_norm(const Vec4& v);

// H -> M H M^dagger; maps Hermitian to Hermitian and multiplies the
// determinant by |det M|^2.
Mat mhm_action(const Mat& m, const Mat& h);

// Real 4 x 4 matrix validated as proper orthochronous Lorentz:
// L^T g L = g, det L = +1, L(0,0) >= 1.
class LorentzMatrix {
 public:
  explicit LorentzMatrix(const Eigen::Matrix4d& m, double tol = kDefaultTol);
  const Eigen::Matrix4d& matrix() const { return m_; }
  double metric_residual() const;

 private:
  Eigen::Matrix4d m_;
};

// Image of M in SO(3,1)^+ under the double cover: column j is the vector of
// M sigma_j M^dagger.  Requires det M = 1 (within tol).
LorentzMatrix lorentz_from_sl2(const Mat& m, double tol = kDefaultTol);

// Complex-orthogonal image of a pair: column j is the vector of
// L sigma_j R^-1.  Requires det L / det R = +-1 (within tol); the resulting
// O satisfies O^T g O = (det L / det R) g.
Mat so4c_from_pair(const Mat& l, const Mat& r, double tol = kDefaultTol);

// Pair (H, Lambda) with H Hermitian and det Lambda = 1, acting on Hermitian
// matrices as X -> Lambda X Lambda^dagger + H.
class SpinPoincareElement {
 public:
  SpinPoincareElement(const Mat& h, const Mat& lambda,
                      double tol = kDefaultTol);
  const Mat& shift() const { return h_; }
  const Mat& rotor() const { return lambda_; }

 private:
  Mat h_;
  Mat lambda_;
};

SpinPoincareElement spin_identity();
// (H1, L1)(H2, L2) = (H1 + L1 H2 L1^dagger, L1 L2).
SpinPoincareElement compose_spin(const SpinPoincareElement& x,
                                 const SpinPoincareElement& y);
SpinPoincareElement invert_spin(const SpinPoincareElement& x);

// 4 x 4 block matrix [[Lambda, H (Lambda^dagger)^-1], [0, (Lambda^dagger)^-1]];
// coincides with matrix_rep_T of the corresponding triple.
Mat spin_matrix_rep(const SpinPoincareElement& x);

// Real four-vector action v -> vec(Lambda vec_to_mat(v) Lambda^dagger + H);
// requires v real-flagged.
Vec4 apply_spin(const SpinPoincareElement& x, const Vec4& v);

// Pure boost of the given rapidity along axis k in {1,2,3}:
// Lambda = cosh(eta/2) I + sinh(eta/2) sigma_k.
SpinPoincareElement make_boost(int axis, double rapidity);

// Rotation by angle about axis k in {1,2,3}:
// Lambda = cos(angle/2) I - i sin(angle/2) sigma_k.
SpinPoincareElement make_rotation(int axis, double angle);

// The triple (H, Lambda, (Lambda^dagger)^-1) over the Pauli algebra.
TElement embed_spin(const SpinPoincareElement& x);

double residual(const SpinPoincareElement& x, const SpinPoincareElement& y);

}  // namespace algroup
