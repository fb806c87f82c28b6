#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include <doctest.h>

#include "algroup/endo.hpp"
#include "algroup/expr.hpp"
#include "algroup/groups.hpp"
#include "algroup/spacetime.hpp"

namespace {

using algroup::AlgebraElement;
using algroup::Mat;
using algroup::Scalar;
using algroup::TElement;
using algroup::Vec4;
namespace expr = algroup::expr;

Scalar eval_scalar(const std::string& src) {
  return std::get<Scalar>(expr::evaluate(expr::parse(src)));
}

AlgebraElement eval_algebra(const std::string& src) {
  return std::get<AlgebraElement>(expr::evaluate(expr::parse(src)));
}

TElement eval_group(const std::string& src) {
  return std::get<TElement>(expr::evaluate(expr::parse(src)));
}

bool coords_close(const AlgebraElement& a, double c0, double c1, double c2,
                  double c3, double tol = 1e-12) {
  const Scalar want[4] = {Scalar(c0, 0), Scalar(c1, 0), Scalar(c2, 0),
                          Scalar(c3, 0)};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(a.coords()[k] - want[k]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("scalar literals, including imaginary suffix forms") {
  CHECK(eval_scalar("42") == Scalar(42, 0));
  CHECK(eval_scalar("2i") == Scalar(0, 2));
  CHECK(eval_scalar("1 + 2i") == Scalar(1, 2));
  CHECK(eval_scalar("1.5e-3i") == Scalar(0, 1.5e-3));
  CHECK(eval_scalar("i") == Scalar(0, 1));
  CHECK(eval_scalar("i * i") == Scalar(-1, 0));
  CHECK(eval_scalar("-3.25") == Scalar(-3.25, 0));
  CHECK(eval_scalar("2 * -5") == Scalar(-10, 0));
  CHECK(eval_scalar("star(1 + 2i)") == Scalar(1, -2));
  CHECK(eval_scalar("(2 + i)^-1") == Scalar(1, 0) / Scalar(2, 1));
  CHECK_THROWS_AS(expr::parse("1e400"), expr::ParseError);
}

TEST_CASE("basis products follow the multiplication table") {
  AlgebraElement p = eval_algebra("sigma1 * sigma2");
  CHECK(std::abs(p.coords()[3] - Scalar(0, 1)) < 1e-15);
  CHECK(std::abs(p.coords()[0]) + std::abs(p.coords()[1]) +
            std::abs(p.coords()[2]) <
        1e-15);
  CHECK(coords_close(eval_algebra("sigma1 * sigma1"), 1, 0, 0, 0));
  CHECK(coords_close(eval_algebra("3 * sigma2 + sigma0 - sigma2"), 1, 0, 2, 0));
  // Scalars promote to multiples of the unit when added to algebra elements.
  CHECK(coords_close(eval_algebra("sigma3 + 2"), 2, 0, 0, 1));
}

TEST_CASE("operator expressions compose and act") {
  // Applying a left-multiplication after a shift: a -> sigma3 (a + 1).
  AlgebraElement out = eval_algebra("L[sigma3] * S[sigma0] @ sigma0");
  CHECK(coords_close(out, 0, 0, 0, 2));

  // The shift operator alone translates.
  CHECK(coords_close(eval_algebra("S[sigma1] @ sigma0"), 1, 1, 0, 0));

  // The right operator acts by the inverse: a -> a r^-1.
  AlgebraElement r_out = eval_algebra("R[2 * sigma0] @ sigma3");
  CHECK(coords_close(r_out, 0, 0, 0, 0.5));

  // r -> R[r] is therefore multiplicative.
  TElement lhs = eval_group("R[sigma1 + 3 * sigma0] * R[sigma2 + 2 * sigma0]");
  TElement rhs = eval_group("R[(sigma1 + 3 * sigma0) * (sigma2 + 2 * sigma0)]");
  CHECK(residual(lhs, rhs) < 1e-12);
}

TEST_CASE("matrix literals produce algebra elements") {
  AlgebraElement m = eval_algebra("[[1, i], [0, 2]]");
  Mat expected(2, 2);
  expected << Scalar(1, 0), Scalar(0, 1), Scalar(0, 0), Scalar(2, 0);
  CHECK(algroup::residual(to_matrix(m), expected) < 1e-15);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("[[1, 0, 0], [0, 1, 0]]")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("[[sigma1, 0], [0, 1]]")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::parse("[[1, 0], [0]]"), expr::ParseError);
}

TEST_CASE("group constructors, star, and inversion") {
  TElement d = eval_group("D(sigma1, sigma3)");
  CHECK(residual(d.shift(), algroup::sigma(1)) == 0.0);
  CHECK(residual(d.left(), algroup::sigma(3)) == 0.0);
  CHECK(residual(d.right(), unit_element(d.shift().spec())) == 0.0);

  // Scalar shifts promote to multiples of the unit.
  TElement d2 = eval_group("D(2, sigma3)");
  CHECK(coords_close(d2.shift(), 2, 0, 0, 0));

  TElement t = eval_group("T(sigma1, sigma3, 2 * sigma0)");
  CHECK(residual(eval_group("star(T(sigma1, sigma3, 2 * sigma0))"),
                 star_T(t)) == 0.0);
  CHECK(residual(eval_group("T(sigma1, sigma3, 2 * sigma0)^-1"),
                 invert_T(t)) < 1e-12);
  CHECK(residual(compose_T(t, invert_T(t)),
                 group_identity(algroup::group_T(t.shift().spec()))) < 1e-12);

  // Singular parts are rejected at evaluation time.
  CHECK_THROWS_AS(expr::evaluate(expr::parse("D(sigma1, sigma0 + sigma3)")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("T(0, sigma0, sigma0 + sigma3)")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("L[sigma0 + sigma3]")),
                  expr::EvalError);
}

TEST_CASE("inversion requires invertible operands") {
  CHECK(eval_scalar("2^-1") == Scalar(0.5, 0));
  CHECK_THROWS_AS(expr::evaluate(expr::parse("0^-1")), expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("(sigma0 + sigma3)^-1")),
                  expr::EvalError);
  AlgebraElement inv = eval_algebra("(sigma1 + sigma2)^-1");
  CHECK(coords_close(alg_mul(inv, eval_algebra("sigma1 + sigma2")), 1, 0, 0,
                     0));
}

TEST_CASE("type errors surface as evaluation errors with positions") {
  CHECK_THROWS_AS(expr::evaluate(expr::parse("L[sigma1] + sigma1")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("L[sigma1] * sigma1")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("-L[sigma1]")), expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("sigma1 @ sigma2")),
                  expr::EvalError);
  CHECK_THROWS_AS(expr::evaluate(expr::parse("S[L[sigma1]]")),
                  expr::EvalError);
  try {
    expr::evaluate(expr::parse("sigma1 + L[sigma2]"));
    FAIL("expected an evaluation error");
  } catch (const expr::EvalError& e) {
    CHECK(std::string(e.what()).find("group") != std::string::npos);
  }
}

TEST_CASE("parse errors carry position and expectation") {
  CHECK_THROWS_AS(expr::parse("x^-2"), expr::ParseError);
  try {
    expr::parse("sigma1 ^ -2");
  } catch (const expr::ParseError& e) {
    CHECK(std::string(e.what()).find("only the exponent -1") !=
          std::string::npos);
    CHECK(e.expected == "'-1'");
  }
  CHECK_THROWS_AS(expr::parse("sigma4"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("frobnicate"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("D(sigma1)"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("1 +"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("sigma1 sigma2"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse(""), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("1 ? 2"), expr::ParseError);
  try {
    expr::parse("D(sigma1 sigma2)");
  } catch (const expr::ParseError& e) {
    CHECK(e.position == 9);
    CHECK(e.expected == "','");
  }
}

TEST_CASE("printing is a stable canonical form") {
  const char* sources[] = {
      "S[sigma1] * L[sigma3] @ sigma0",
      "D(sigma1, sigma3)",
      "T(sigma1, sigma3, 2 * sigma0)^-1",
      "star(sigma1 + 2i * sigma2)",
      "[[1, i], [0, 2]]",
      "-(sigma1 + sigma2) * sigma3",
      "(1 + 2i) * sigma0",
      "R[sigma2]^-1 * S[sigma1]",
  };
  for (const char* src : sources) {
    CAPTURE(src);
    expr::NodePtr first = expr::parse(src);
    std::string printed = expr::print(first);
    expr::NodePtr second = expr::parse(printed);
    CHECK(expr::tree_equal(first, second));
    CHECK(expr::print(second) == printed);
  }
  // Round-tripping preserves value even where the tree is resugared.
  for (const char* src : {"2 * -5", "1 + 2i", "--4"}) {
    CAPTURE(src);
    Scalar direct = eval_scalar(src);
    Scalar reprinted = eval_scalar(expr::print(expr::parse(src)));
    CHECK(direct == reprinted);
  }
}

TEST_CASE("four-vector literals") {
  Vec4 v = expr::parse_vec4("(1, 0, 0, 0)");
  CHECK(v.real_only());
  CHECK(v[0] == Scalar(1, 0));

  Vec4 w = expr::parse_vec4("(1, 2i, 0, 0)");
  CHECK_FALSE(w.real_only());
  CHECK(w[1] == Scalar(0, 2));

  Vec4 computed = expr::parse_vec4("(1 + 1, 2 * 3, -1, i * i)");
  CHECK(computed.real_only());
  CHECK(computed[0] == Scalar(2, 0));
  CHECK(computed[1] == Scalar(6, 0));
  CHECK(computed[2] == Scalar(-1, 0));
  CHECK(computed[3] == Scalar(-1, 0));

  CHECK_THROWS_AS(expr::parse_vec4("(1, 2, 3)"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse_vec4("1, 2, 3, 4"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse_vec4("(1, 2, 3, sigma1)"), expr::EvalError);
}
