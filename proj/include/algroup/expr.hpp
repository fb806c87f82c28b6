#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "algroup/algebra.hpp"
#include "algroup/groups.hpp"
#include "algroup/spacetime.hpp"

namespace algroup::expr {

// Expression language over the Pauli algebra.
//
//   input   := apply
//   apply   := sum [ "@" sum ]
//   sum     := product { ("+" | "-") product }
//   product := unary { "*" unary }
//   unary   := "-" unary | postfix
//   postfix := atom { "^" "-" "1" }
//   atom    := number | "i" | "sigma0".."sigma3"
//            | "S" "[" sum "]" | "L" "[" sum "]" | "R" "[" sum "]"
//            | "D" "(" sum "," sum ")" | "T" "(" sum "," sum "," sum ")"
//            | "star" "(" sum ")" | "(" sum ")" | matrix
//   matrix  := "[" row { "," row } "]",  row := "[" sum { "," sum } "]"
//
// Numbers accept a trailing "i" for imaginary literals (e.g. 2i, 1.5e-3i).
// S/L/R build shift, left, and right operators; the right operator carries
// the inverse twist, so R[r] acts as a -> a r^-1 and r -> R[r] is a
// homomorphism.  "@" applies a group element to an algebra element.

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position,
             std::string expected_tokens);
  std::size_t position;
  std::string expected;
};

struct EvalError : std::runtime_error {
  EvalError(const std::string& message, std::size_t position);
  std::size_t position;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind {
    Number,      // scalar literal
    Sigma,       // basis element sigma0..sigma3
    MatrixLit,   // rows of scalar-valued entries
    ShiftOp,     // S[...]
    LeftOp,      // L[...]
    RightOp,     // R[...]
    MakeD,       // D(b, l)
    MakeT,       // T(b, l, r)
    StarFn,      // star(x)
    Mul,
    Add,
    Neg,
    Inv,         // x^-1
    Apply,       // x @ a
  };

  Kind kind;
  Scalar number{};
  int sigma_index = 0;
  std::vector<std::vector<NodePtr>> rows;  // MatrixLit
  std::vector<NodePtr> args;
  std::size_t pos = 0;
};

NodePtr parse(const std::string& source);

// Canonical text form; parse(print(n)) reproduces the same tree.
std::string print(const NodePtr& node);

bool tree_equal(const NodePtr& a, const NodePtr& b);

using Value = std::variant<Scalar, AlgebraElement, TElement>;

// Evaluates over the Pauli algebra.  Scalars promote to multiples of the
// unit where an algebra element is required.
Value evaluate(const NodePtr& node);

// "(v0,v1,v2,v3)" with scalar-valued components.
Vec4 parse_vec4(const std::string& source);

}  // namespace algroup::expr
