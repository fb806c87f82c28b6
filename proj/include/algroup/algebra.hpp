#pragma once

#include <memory>
#include <string>
#include <vector>

#include "algroup/numeric.hpp"

namespace algroup {

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

// Finite-dimensional associative unital algebra presented by structure
// constants: e_i * e_j = sum_k c(i,j,k) e_k.  Construction validates
// associativity and the two-sided unit law to 1e-12; an optional matrix
// basis realizes elements as n x n matrices and provides the involution
// a -> a^* (conjugate transpose pulled back through the basis).
class AlgebraSpec {
 public:
  // `structure` is row-major with index (i*dim + j)*dim + k.
  // `matrix_basis` may be empty (no matrix form) or hold `dim` square
  // matrices of a common size realizing the same products.
  AlgebraSpec(std::string name, int dim, Field field,
              std::vector<Scalar> structure, CVec unit,
              std::vector<Mat> matrix_basis = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  Field field() const { return field_; }
  Scalar c(int i, int j, int k) const {
    return structure_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)];
  }
  const CVec& unit() const { return unit_; }

  bool has_matrix_form() const { return !matrix_basis_.empty(); }
  int matrix_dim() const;  // n; throws without a matrix form
  const std::vector<Mat>& matrix_basis() const { return matrix_basis_; }

  // dim x dim matrix of b -> a*b in basis coordinates.
  Mat left_mul_matrix(const CVec& coords) const;
  // dim x dim matrix of a -> a*b.
  Mat right_mul_matrix(const CVec& coords) const;

  // Least-squares coordinates of an n x n matrix in the matrix basis;
  // throws if there is no matrix form or the matrix lies outside the span.
  CVec coords_of_matrix(const Mat& m) const;

 private:
  std::string name_;
  int dim_;
  Field field_;
  std::vector<Scalar> structure_;
  CVec unit_;
  std::vector<Mat> matrix_basis_;
  std::vector<Mat> left_basis_;   // left_basis_[i](k, j)  = c(i, j, k)
  std::vector<Mat> right_basis_;  // right_basis_[j](k, i) = c(i, j, k)
  Eigen::ColPivHouseholderQR<Mat> basis_qr_;  // solves vec(M) = Phi * x
};

bool spec_equal(const AlgebraSpec& a, const AlgebraSpec& b);

// Full matrix algebra C(n x n) in the matrix-unit basis E_ij (row-major).
SpecPtr matrix_algebra_spec(int n);

// C(2 x 2) in the basis sigma_0..sigma_3 with sigma_0 = I and
// sigma_2 = [[0, -i], [i, 0]].
SpecPtr pauli_spec();

class AlgebraElement {
 public:
  AlgebraElement(SpecPtr spec, CVec coords);

  const SpecPtr& spec() const { return spec_; }
  const CVec& coords() const { return coords_; }

 private:
  SpecPtr spec_;
  CVec coords_;
};

bool same_spec(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
// Real-field algebras reject scalars with a nonzero imaginary part.
AlgebraElement alg_scalar_mul(Scalar lambda, const AlgebraElement& a);

AlgebraElement zero_element(const SpecPtr& spec);
AlgebraElement unit_element(const SpecPtr& spec);
AlgebraElement basis_element(const SpecPtr& spec, int i);
// basis_element(pauli_spec(), i)
AlgebraElement sigma(int i);

inline AlgebraElement operator+(const AlgebraElement& a,
                                const AlgebraElement& b) {
  return alg_add(a, b);
}
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator-(const AlgebraElement& a) {
  return alg_scalar_mul(Scalar(-1.0, 0.0), a);
}
inline AlgebraElement operator*(const AlgebraElement& a,
                                const AlgebraElement& b) {
  return alg_mul(a, b);
}
inline AlgebraElement operator*(Scalar lambda, const AlgebraElement& a) {
  return alg_scalar_mul(lambda, a);
}

Mat to_matrix(const AlgebraElement& a);
AlgebraElement from_matrix(const SpecPtr& spec, const Mat& m);

// Conjugate transpose through the matrix form; requires one.
AlgebraElement star(const AlgebraElement& a);

// Invertibility of the left-multiplication matrix; in a finite-dimensional
// associative algebra a one-sided inverse is automatically two-sided.
bool is_invertible(const AlgebraElement& a);
AlgebraElement invert(const AlgebraElement& a);

// Dimension of the linear span; elements must share a spec.
int span_rank(const std::vector<AlgebraElement>& elems);
int span_rank(const std::vector<Mat>& mats);

double residual(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace algroup
