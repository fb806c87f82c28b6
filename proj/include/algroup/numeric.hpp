#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace algroup {

using Scalar = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

enum class Field { Real, Complex };

// Run-wide default comparison tolerance (relative, see residual()).
inline constexpr double kDefaultTol = 1e-9;

// An element whose left-multiplication matrix has a pivot below this
// threshold (relative to the largest pivot) is treated as singular.
inline constexpr double kSingularTol = 1e-10;

inline bool is_finite(Scalar z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_finite(const Mat& m);

// Throws std::invalid_argument naming `what` if any entry is NaN/Inf.
void require_finite(const Mat& m, const char* what);

double max_abs(const Mat& m);

// Largest entrywise difference, scaled by 1 + the larger entry magnitude.
double residual(const Mat& a, const Mat& b);
double residual(Scalar a, Scalar b);

bool nearly_equal(const Mat& a, const Mat& b, double tol = kDefaultTol);

// Largest singular value.
double operator_norm(const Mat& m);

bool is_hermitian(const Mat& m, double tol = kDefaultTol);

}  // namespace algroup
