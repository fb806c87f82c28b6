#pragma once

#include <string>
#include <vector>

#include "algroup/numeric.hpp"

namespace algroup {

// Minimal hand-rolled JSON emission.  Output is byte-deterministic: fixed
// key order, no locale dependence, doubles printed with %.17g so they
// round-trip exactly.
std::string json_escape(const std::string& s);
std::string json_double(double x);
std::string json_scalar(Scalar z);                 // [re, im]
std::string json_matrix(const Mat& m);             // rows of [re, im] pairs
std::string json_real_matrix(const Eigen::Matrix4d& m);
std::string json_coords(const CVec& v);            // [[re, im], ...]

}  // namespace algroup
