#include "algroup/jsonio.hpp"

#include <cstdio>

namespace algroup {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string json_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_scalar(Scalar z) {
  return "[" + json_double(z.real()) + "," + json_double(z.imag()) + "]";
}

std::string json_matrix(const Mat& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += json_scalar(m(i, j));
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string json_real_matrix(const Eigen::Matrix4d& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += "[";
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (j) out += ",";
      out += json_double(m(i, j));
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string json_coords(const CVec& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += json_scalar(v(i));
  }
  out += "]";
  return out;
}

}  // namespace algroup
