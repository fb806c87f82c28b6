#include "algroup/algebra.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace algroup {

namespace {

constexpr double kStructureTol = 1e-12;

Mat vectorize(const Mat& m) {
  Mat v(m.size(), 1);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(p++, 0) = m(i, j);
  }
  return v;
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::string name, int dim, Field field,
                         std::vector<Scalar> structure, CVec unit,
                         std::vector<Mat> matrix_basis)
    : name_(std::move(name)),
      dim_(dim),
      field_(field),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      matrix_basis_(std::move(matrix_basis)) {
  if (dim_ < 1) throw std::invalid_argument("AlgebraSpec: dim must be >= 1");
  const auto n3 = static_cast<std::size_t>(dim_) * dim_ * dim_;
  if (structure_.size() != n3) {
    throw std::invalid_argument("AlgebraSpec: structure size must be dim^3");
  }
  if (unit_.size() != dim_) {
    throw std::invalid_argument("AlgebraSpec: unit size must be dim");
  }
  for (Scalar z : structure_) {
    if (!is_finite(z)) {
      throw std::invalid_argument("AlgebraSpec: structure must be finite");
    }
    if (field_ == Field::Real && z.imag() != 0.0) {
      throw std::invalid_argument(
          "AlgebraSpec: real-field structure constants must be real");
    }
  }
  require_finite(unit_, "AlgebraSpec unit");
  if (field_ == Field::Real) {
    for (int i = 0; i < dim_; ++i) {
      if (unit_(i).imag() != 0.0) {
        throw std::invalid_argument("AlgebraSpec: real-field unit must be real");
      }
    }
  }

  // Associativity: sum_m c(i,j,m) c(m,k,l) == sum_m c(j,k,m) c(i,m,l).
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        for (int l = 0; l < dim_; ++l) {
          Scalar lhs(0.0, 0.0);
          Scalar rhs(0.0, 0.0);
          for (int m = 0; m < dim_; ++m) {
            lhs += c(i, j, m) * c(m, k, l);
            rhs += c(j, k, m) * c(i, m, l);
          }
          if (std::abs(lhs - rhs) > kStructureTol) {
            throw std::invalid_argument("AlgebraSpec: structure constants are not associative");
          }
        }
      }
    }
  }

  // Two-sided unit law: unit * e_j = e_j = e_j * unit.
  for (int j = 0; j < dim_; ++j) {
    for (int k = 0; k < dim_; ++k) {
      Scalar left(0.0, 0.0);
      Scalar right(0.0, 0.0);
      for (int i = 0; i < dim_; ++i) {
        left += unit_(i) * c(i, j, k);
        right += unit_(i) * c(j, i, k);
      }
      const Scalar expect = (j == k) ? Scalar(1.0, 0.0) : Scalar(0.0, 0.0);
      if (std::abs(left - expect) > kStructureTol ||
          std::abs(right - expect) > kStructureTol) {
        throw std::invalid_argument("AlgebraSpec: unit law fails");
      }
    }
  }

  left_basis_.reserve(dim_);
  right_basis_.reserve(dim_);
  for (int i = 0; i < dim_; ++i) {
    Mat lb = Mat::Zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) lb(k, j) = c(i, j, k);
    }
    left_basis_.push_back(std::move(lb));
  }
  for (int j = 0; j < dim_; ++j) {
    Mat rb = Mat::Zero(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int k = 0; k < dim_; ++k) rb(k, i) = c(i, j, k);
    }
    right_basis_.push_back(std::move(rb));
  }

  if (!matrix_basis_.empty()) {
    if (static_cast<int>(matrix_basis_.size()) != dim_) {
      throw std::invalid_argument("AlgebraSpec: matrix basis must have dim entries");
    }
    const Eigen::Index n = matrix_basis_[0].rows();
    for (const Mat& b : matrix_basis_) {
      if (b.rows() != n || b.cols() != n) {
        throw std::invalid_argument("AlgebraSpec: matrix basis must be square, same size");
      }
      require_finite(b, "AlgebraSpec matrix basis");
    }
    Mat phi(n * n, dim_);
    for (int i = 0; i < dim_; ++i) phi.col(i) = vectorize(matrix_basis_[i]);
    basis_qr_.compute(phi);
    basis_qr_.setThreshold(kSingularTol);
    if (basis_qr_.rank() != dim_) {
      throw std::invalid_argument("AlgebraSpec: matrix basis is linearly dependent");
    }
    // The matrix basis must realize the same products as the structure
    // constants.
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        Mat prod = matrix_basis_[i] * matrix_basis_[j];
        Mat combo = Mat::Zero(n, n);
        for (int k = 0; k < dim_; ++k) combo += c(i, j, k) * matrix_basis_[k];
        if (max_abs(prod - combo) > kStructureTol * (1.0 + max_abs(prod))) {
          throw std::invalid_argument("AlgebraSpec: matrix basis disagrees with structure constants");
        }
      }
    }
  }
}

int AlgebraSpec::matrix_dim() const {
  if (!has_matrix_form()) {
    throw std::logic_error("AlgebraSpec: no matrix form");
  }
  return static_cast<int>(matrix_basis_[0].rows());
}

Mat AlgebraSpec::left_mul_matrix(const CVec& coords) const {
  Mat m = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) m += coords(i) * left_basis_[i];
  return m;
}

Mat AlgebraSpec::right_mul_matrix(const CVec& coords) const {
  Mat m = Mat::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) m += coords(j) * right_basis_[j];
  return m;
}

CVec AlgebraSpec::coords_of_matrix(const Mat& m) const {
  if (!has_matrix_form()) {
    throw std::logic_error("AlgebraSpec: no matrix form");
  }
  const int n = matrix_dim();
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("coords_of_matrix: wrong matrix size");
  }
  require_finite(m, "coords_of_matrix input");
  Mat rhs = vectorize(m);
  Mat sol = basis_qr_.solve(rhs);
  CVec x = sol.col(0);
  Mat back = Mat::Zero(n, n);
  for (int i = 0; i < dim_; ++i) back += x(i) * matrix_basis_[i];
  if (max_abs(back - m) > 1e-9 * (1.0 + max_abs(m))) {
    throw std::invalid_argument("coords_of_matrix: matrix is outside the algebra");
  }
  return x;
}

bool spec_equal(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (&a == &b) return true;
  return a.name() == b.name() && a.dim() == b.dim() && a.field() == b.field();
}

SpecPtr matrix_algebra_spec(int n) {
  if (n < 1) throw std::invalid_argument("matrix_algebra_spec: n must be >= 1");
  static std::mutex mu;
  static std::map<int, SpecPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const int dim = n * n;
  // Basis E_pq at index p*n + q; E_pq E_rs = delta_qr E_ps.
  std::vector<Scalar> c(static_cast<std::size_t>(dim) * dim * dim,
                        Scalar(0.0, 0.0));
  auto at = [&](int i, int j, int k) -> Scalar& {
    return c[static_cast<std::size_t>((i * dim + j) * dim + k)];
  };
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (q == r) at(p * n + q, r * n + s, p * n + s) = Scalar(1.0, 0.0);
        }
      }
    }
  }
  CVec unit = CVec::Zero(dim);
  for (int p = 0; p < n; ++p) unit(p * n + p) = Scalar(1.0, 0.0);
  std::vector<Mat> basis;
  basis.reserve(dim);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      Mat e = Mat::Zero(n, n);
      e(p, q) = Scalar(1.0, 0.0);
      basis.push_back(std::move(e));
    }
  }
  auto spec = std::make_shared<AlgebraSpec>(
      "mat" + std::to_string(n), dim, Field::Complex, std::move(c),
      std::move(unit), std::move(basis));
  cache.emplace(n, spec);
  return spec;
}

SpecPtr pauli_spec() {
  static SpecPtr spec = [] {
    const Scalar i(0.0, 1.0);
    std::vector<Mat> s(4, Mat::Zero(2, 2));
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    // tr(sigma_a sigma_b) = 2 delta_ab, so products decompose by traces.
    std::vector<Scalar> c(64, Scalar(0.0, 0.0));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        Mat prod = s[a] * s[b];
        for (int k = 0; k < 4; ++k) {
          Scalar coeff = (s[k] * prod).trace() / 2.0;
          // Products of sigma matrices have exact coefficients in
          // {0, +-1, +-i}; snap the arithmetic dust.
          double re = std::round(coeff.real());
          double im = std::round(coeff.imag());
          c[static_cast<std::size_t>((a * 4 + b) * 4 + k)] = Scalar(re, im);
        }
      }
    }
    CVec unit = CVec::Zero(4);
    unit(0) = Scalar(1.0, 0.0);
    return std::make_shared<AlgebraSpec>("pauli", 4, Field::Complex,
                                         std::move(c), std::move(unit),
                                         std::move(s));
  }();
  return spec;
}

AlgebraElement::AlgebraElement(SpecPtr spec, CVec coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
  if (!spec_) throw std::invalid_argument("AlgebraElement: null spec");
  if (coords_.size() != spec_->dim()) {
    throw std::invalid_argument("AlgebraElement: coords size must equal dim");
  }
  require_finite(coords_, "AlgebraElement coords");
  if (spec_->field() == Field::Real) {
    for (int i = 0; i < spec_->dim(); ++i) {
      if (coords_(i).imag() != 0.0) {
        throw std::invalid_argument("AlgebraElement: real-field coords must be real");
      }
    }
  }
}

bool same_spec(const AlgebraElement& a, const AlgebraElement& b) {
  return spec_equal(*a.spec(), *b.spec());
}

namespace {
void require_same_spec(const AlgebraElement& a, const AlgebraElement& b,
                       const char* op) {
  if (!same_spec(a, b)) {
    throw std::invalid_argument(std::string(op) + ": spec mismatch");
  }
}
}  // namespace

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_spec(a, b, "alg_add");
  return AlgebraElement(a.spec(), a.coords() + b.coords());
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_spec(a, b, "alg_mul");
  return AlgebraElement(a.spec(), a.spec()->left_mul_matrix(a.coords()) * b.coords());
}

AlgebraElement alg_scalar_mul(Scalar lambda, const AlgebraElement& a) {
  if (!is_finite(lambda)) {
    throw std::invalid_argument("alg_scalar_mul: scalar must be finite");
  }
  if (a.spec()->field() == Field::Real && lambda.imag() != 0.0) {
    throw std::invalid_argument("alg_scalar_mul: complex scalar on a real-field algebra");
  }
  return AlgebraElement(a.spec(), lambda * a.coords());
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return alg_add(a, alg_scalar_mul(Scalar(-1.0, 0.0), b));
}

AlgebraElement zero_element(const SpecPtr& spec) {
  return AlgebraElement(spec, CVec::Zero(spec->dim()));
}

AlgebraElement unit_element(const SpecPtr& spec) {
  return AlgebraElement(spec, spec->unit());
}

AlgebraElement basis_element(const SpecPtr& spec, int i) {
  if (i < 0 || i >= spec->dim()) {
    throw std::invalid_argument("basis_element: index out of range");
  }
  CVec v = CVec::Zero(spec->dim());
  v(i) = Scalar(1.0, 0.0);
  return AlgebraElement(spec, std::move(v));
}

AlgebraElement sigma(int i) { return basis_element(pauli_spec(), i); }

Mat to_matrix(const AlgebraElement& a) {
  const auto& spec = *a.spec();
  if (!spec.has_matrix_form()) {
    throw std::logic_error("to_matrix: spec has no matrix form");
  }
  const int n = spec.matrix_dim();
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < spec.dim(); ++i) {
    m += a.coords()(i) * spec.matrix_basis()[i];
  }
  return m;
}

AlgebraElement from_matrix(const SpecPtr& spec, const Mat& m) {
  return AlgebraElement(spec, spec->coords_of_matrix(m));
}

AlgebraElement star(const AlgebraElement& a) {
  if (!a.spec()->has_matrix_form()) {
    throw std::logic_error("star: spec has no matrix form");
  }
  return from_matrix(a.spec(), to_matrix(a).adjoint());
}

bool is_invertible(const AlgebraElement& a) {
  Eigen::FullPivLU<Mat> lu(a.spec()->left_mul_matrix(a.coords()));
  lu.setThreshold(kSingularTol);
  return lu.isInvertible();
}

AlgebraElement invert(const AlgebraElement& a) {
  Eigen::FullPivLU<Mat> lu(a.spec()->left_mul_matrix(a.coords()));
  lu.setThreshold(kSingularTol);
  if (!lu.isInvertible()) {
    throw std::domain_error("invert: element is not invertible");
  }
  // Solve a * x = 1; in a finite-dimensional associative unital algebra the
  // one-sided inverse is two-sided.
  CVec x = lu.solve(a.spec()->unit());
  return AlgebraElement(a.spec(), std::move(x));
}

int span_rank(const std::vector<AlgebraElement>& elems) {
  if (elems.empty()) throw std::invalid_argument("span_rank: empty input");
  const int dim = elems[0].spec()->dim();
  Mat m(dim, static_cast<Eigen::Index>(elems.size()));
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (!same_spec(elems[0], elems[j])) {
      throw std::invalid_argument("span_rank: spec mismatch");
    }
    m.col(static_cast<Eigen::Index>(j)) = elems[j].coords();
  }
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  qr.setThreshold(kSingularTol);
  return static_cast<int>(qr.rank());
}

int span_rank(const std::vector<Mat>& mats) {
  if (mats.empty()) throw std::invalid_argument("span_rank: empty input");
  const Eigen::Index rows = mats[0].rows();
  const Eigen::Index cols = mats[0].cols();
  Mat m(rows * cols, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) {
    if (mats[j].rows() != rows || mats[j].cols() != cols) {
      throw std::invalid_argument("span_rank: shape mismatch");
    }
    m.col(static_cast<Eigen::Index>(j)) = vectorize(mats[j]).col(0);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  qr.setThreshold(kSingularTol);
  return static_cast<int>(qr.rank());
}

double residual(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_spec(a, b, "residual");
  return residual(Mat(a.coords()), Mat(b.coords()));
}

}  // namespace algroup
