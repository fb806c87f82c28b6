#include "algroup/groups.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace algroup {

namespace {

void require_same_spec(const AlgebraElement& a, const AlgebraElement& b,
                       const char* op) {
  if (!same_spec(a, b)) {
    throw std::invalid_argument(std::string(op) + ": spec mismatch");
  }
}

void require_invertible(const AlgebraElement& a, const char* what) {
  if (!is_invertible(a)) {
    throw std::domain_error(std::string(what) + " must be invertible");
  }
}

}  // namespace

DElement::DElement(AlgebraElement shift, AlgebraElement left)
    : shift_(std::move(shift)), left_(std::move(left)) {
  require_same_spec(shift_, left_, "DElement");
  require_invertible(left_, "DElement: L part");
}

TElement::TElement(AlgebraElement shift, AlgebraElement left,
                   AlgebraElement right)
    : shift_(std::move(shift)),
      left_(std::move(left)),
      right_(std::move(right)) {
  require_same_spec(shift_, left_, "TElement");
  require_same_spec(shift_, right_, "TElement");
  require_invertible(left_, "TElement: L part");
  require_invertible(right_, "TElement: R part");
}

StarDElement::StarDElement(AlgebraElement shift, AlgebraElement left,
                           double tol)
    : shift_(std::move(shift)), left_(std::move(left)) {
  require_same_spec(shift_, left_, "StarDElement");
  if (residual(shift_, star(shift_)) > tol) {
    throw std::invalid_argument("StarDElement: shift part must be self-adjoint");
  }
  require_invertible(left_, "StarDElement: G part");
}

DElement d_identity(const SpecPtr& spec) {
  return DElement(zero_element(spec), unit_element(spec));
}

DElement compose_D(const DElement& x, const DElement& y) {
  require_same_spec(x.shift(), y.shift(), "compose_D");
  return DElement(x.left() * y.shift() + x.shift(), x.left() * y.left());
}

DElement invert_D(const DElement& x) {
  AlgebraElement linv = invert(x.left());
  return DElement(-(linv * x.shift()), linv);
}

AlgebraElement apply_D(const DElement& x, const AlgebraElement& a) {
  require_same_spec(x.shift(), a, "apply_D");
  return x.left() * a + x.shift();
}

Mat matrix_rep_D(const DElement& x) {
  const auto& spec = *x.spec();
  if (!spec.has_matrix_form()) {
    throw std::logic_error("matrix_rep_D: spec has no matrix form");
  }
  const int n = spec.matrix_dim();
  Mat m = Mat::Zero(2 * n, 2 * n);
  m.block(0, 0, n, n) = to_matrix(x.left());
  m.block(0, n, n, n) = to_matrix(x.shift());
  m.block(n, n, n, n) = Mat::Identity(n, n);
  return m;
}

AlgebraElement adjoint_D(const AlgebraElement& l, const AlgebraElement& b) {
  require_same_spec(l, b, "adjoint_D");
  require_invertible(l, "adjoint_D: l");
  // (0,l)(b,1)(0,l)^-1 = (l*b, 1); conjugation preserves the shift subgroup
  // and restricts to left multiplication on it.
  return l * b;
}

Mat affine_rep_D(const DElement& x) {
  const auto& spec = *x.spec();
  const int n = spec.dim();
  Mat m = Mat::Zero(n + 1, n + 1);
  m.block(0, 0, n, n) = spec.left_mul_matrix(x.left().coords());
  m.block(0, n, n, 1) = x.shift().coords();
  m(n, n) = Scalar(1.0, 0.0);
  return m;
}

TElement t_identity(const SpecPtr& spec) {
  return TElement(zero_element(spec), unit_element(spec), unit_element(spec));
}

TElement compose_T(const TElement& x, const TElement& y) {
  require_same_spec(x.shift(), y.shift(), "compose_T");
  // Compose the affine maps a -> L a R^-1 + B:
  //   x(y(a)) = L1 L2 a (R1 R2)^-1 + (L1 B2 R1^-1 + B1).
  AlgebraElement shift = x.left() * y.shift() * invert(x.right()) + x.shift();
  return TElement(std::move(shift), x.left() * y.left(),
                  x.right() * y.right());
}

TElement invert_T(const TElement& x) {
  AlgebraElement linv = invert(x.left());
  AlgebraElement rinv = invert(x.right());
  return TElement(-(linv * x.shift() * x.right()), linv, rinv);
}

AlgebraElement apply_T(const TElement& x, const AlgebraElement& a) {
  require_same_spec(x.shift(), a, "apply_T");
  return x.left() * a * invert(x.right()) + x.shift();
}

Mat matrix_rep_T(const TElement& x) {
  const auto& spec = *x.spec();
  if (!spec.has_matrix_form()) {
    throw std::logic_error("matrix_rep_T: spec has no matrix form");
  }
  const int n = spec.matrix_dim();
  Mat m = Mat::Zero(2 * n, 2 * n);
  m.block(0, 0, n, n) = to_matrix(x.left());
  m.block(0, n, n, n) = to_matrix(x.shift() * x.right());
  m.block(n, n, n, n) = to_matrix(x.right());
  return m;
}

TElement star_T(const TElement& x) {
  return TElement(star(x.shift()), invert(star(x.right())),
                  invert(star(x.left())));
}

TElement embed_D(const DElement& x) {
  return TElement(x.shift(), x.left(), unit_element(x.spec()));
}

TElement shift_operator(const AlgebraElement& b) {
  return TElement(b, unit_element(b.spec()), unit_element(b.spec()));
}

TElement left_operator(const AlgebraElement& l) {
  return TElement(zero_element(l.spec()), l, unit_element(l.spec()));
}

TElement right_operator(const AlgebraElement& r, RightTwist twist) {
  AlgebraElement part =
      twist == RightTwist::Inverse ? r : invert(star(r));
  return TElement(zero_element(r.spec()), unit_element(r.spec()),
                  std::move(part));
}

StarDElement make_star_D(const AlgebraElement& h, const AlgebraElement& g,
                         double tol) {
  return StarDElement(h, g, tol);
}

TElement embed_star_D(const StarDElement& x) {
  return TElement(x.shift(), x.left(), invert(star(x.left())));
}

bool center_equiv(const TElement& x, const TElement& y, double tol) {
  if (!same_spec(x.shift(), y.shift())) return false;
  if (residual(x.shift(), y.shift()) > tol) return false;
  // Candidate scalar: unit coefficient of q = L_y L_x^-1, i.e. the
  // projection <u, q>/<u, u>; on a matrix basis this equals tr(q)/n.
  AlgebraElement q = y.left() * invert(x.left());
  const CVec& u = x.spec()->unit();
  Scalar c = u.dot(q.coords()) / u.dot(u);
  if (std::abs(c) <= tol) return false;
  return residual(y.left(), alg_scalar_mul(c, x.left())) <= tol &&
         residual(y.right(), alg_scalar_mul(c, x.right())) <= tol;
}

double residual(const DElement& x, const DElement& y) {
  return std::max(residual(x.shift(), y.shift()),
                  residual(x.left(), y.left()));
}

double residual(const TElement& x, const TElement& y) {
  return std::max({residual(x.shift(), y.shift()),
                   residual(x.left(), y.left()),
                   residual(x.right(), y.right())});
}

}  // namespace algroup
