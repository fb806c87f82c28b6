#include "algroup/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace algroup {

bool is_finite(const Mat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!is_finite(m(i, j))) return false;
    }
  }
  return true;
}

void require_finite(const Mat& m, const char* what) {
  if (!is_finite(m)) {
    throw std::invalid_argument(std::string(what) + ": entries must be finite");
  }
}

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double residual(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("residual: shape mismatch");
  }
  const double scale = 1.0 + std::max(max_abs(a), max_abs(b));
  return max_abs(a - b) / scale;
}

double residual(Scalar a, Scalar b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

bool nearly_equal(const Mat& a, const Mat& b, double tol) {
  return residual(a, b) <= tol;
}

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return residual(m, Mat(m.adjoint())) <= tol;
}

}  // namespace algroup
