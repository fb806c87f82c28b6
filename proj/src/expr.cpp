#include "algroup/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

namespace algroup::expr {

ParseError::ParseError(const std::string& message, std::size_t position,
                       std::string expected_tokens)
    : std::runtime_error(message + " at position " + std::to_string(position) +
                         (expected_tokens.empty()
                              ? std::string()
                              : " (expected " + expected_tokens + ")")),
      position(position),
      expected(std::move(expected_tokens)) {}

EvalError::EvalError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position(position) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Kind {
    Number, Ident, LBracket, RBracket, LParen, RParen,
    Comma, Star, Plus, Minus, Caret, At, End,
  };
  Kind kind;
  Scalar number{};
  std::string text;
  std::size_t pos = 0;
};

const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::Number: return "number";
    case Token::Kind::Ident: return "identifier";
    case Token::Kind::LBracket: return "'['";
    case Token::Kind::RBracket: return "']'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Caret: return "'^'";
    case Token::Kind::At: return "'@'";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Token::Kind k) {
      out.push_back({k, {}, std::string(1, ch), start});
      ++i;
    };
    if (ch == '[') { single(Token::Kind::LBracket); continue; }
    if (ch == ']') { single(Token::Kind::RBracket); continue; }
    if (ch == '(') { single(Token::Kind::LParen); continue; }
    if (ch == ')') { single(Token::Kind::RParen); continue; }
    if (ch == ',') { single(Token::Kind::Comma); continue; }
    if (ch == '*') { single(Token::Kind::Star); continue; }
    if (ch == '+') { single(Token::Kind::Plus); continue; }
    if (ch == '-') { single(Token::Kind::Minus); continue; }
    if (ch == '^') { single(Token::Kind::Caret); continue; }
    if (ch == '@') { single(Token::Kind::At); continue; }

    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < n && src[j] == '.') {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < n && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(src[k]))) {
          while (k < n && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      double value = 0.0;
      try {
        value = std::stod(src.substr(i, j - i));
      } catch (const std::exception&) {
        throw ParseError("number out of range", start, "");
      }
      bool imaginary = false;
      // A trailing 'i' not followed by another identifier character marks an
      // imaginary literal.
      if (j < n && src[j] == 'i' &&
          (j + 1 >= n || (!std::isalnum(static_cast<unsigned char>(src[j + 1])) &&
                          src[j + 1] != '_'))) {
        imaginary = true;
        ++j;
      }
      Token tok{Token::Kind::Number, imaginary ? Scalar(0.0, value)
                                               : Scalar(value, 0.0),
                src.substr(i, j - i), start};
      out.push_back(std::move(tok));
      i = j;
      continue;
    }

    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                       src[j] == '_')) {
        ++j;
      }
      std::string word = src.substr(i, j - i);
      if (word == "i") {
        out.push_back({Token::Kind::Number, Scalar(0.0, 1.0), word, start});
      } else {
        out.push_back({Token::Kind::Ident, {}, std::move(word), start});
      }
      i = j;
      continue;
    }

    throw ParseError("unexpected character '" + std::string(1, ch) + "'",
                     start, "");
  }
  out.push_back({Token::Kind::End, {}, "", n});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(const std::string& src) : tokens_(lex(src)) {}

  NodePtr parse_input() {
    NodePtr e = parse_apply();
    expect(Token::Kind::End, "end of input");
    return e;
  }

  void parse_vec4_input(std::vector<NodePtr>& components) {
    expect(Token::Kind::LParen, "'('");
    components.push_back(parse_sum());
    for (int k = 0; k < 3; ++k) {
      expect(Token::Kind::Comma, "','");
      components.push_back(parse_sum());
    }
    expect(Token::Kind::RParen, "')'");
    expect(Token::Kind::End, "end of input");
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) {
      throw ParseError("unexpected " + std::string(token_name(peek().kind)),
                       peek().pos, what);
    }
    return next();
  }

  static NodePtr make(Node n) { return std::make_shared<Node>(std::move(n)); }

  NodePtr parse_apply() {
    NodePtr a = parse_sum();
    if (peek().kind == Token::Kind::At) {
      const std::size_t at_pos = next().pos;
      NodePtr b = parse_sum();
      Node node{Node::Kind::Apply, {}, 0, {}, {a, b}, at_pos};
      return make(std::move(node));
    }
    return a;
  }

  NodePtr parse_sum() {
    NodePtr a = parse_product();
    while (peek().kind == Token::Kind::Plus ||
           peek().kind == Token::Kind::Minus) {
      const Token op = next();
      NodePtr b = parse_product();
      if (op.kind == Token::Kind::Minus) {
        Node neg{Node::Kind::Neg, {}, 0, {}, {b}, op.pos};
        b = make(std::move(neg));
      }
      Node node{Node::Kind::Add, {}, 0, {}, {a, b}, op.pos};
      a = make(std::move(node));
    }
    return a;
  }

  NodePtr parse_product() {
    NodePtr a = parse_unary();
    while (peek().kind == Token::Kind::Star) {
      const std::size_t star_pos = next().pos;
      NodePtr b = parse_unary();
      Node node{Node::Kind::Mul, {}, 0, {}, {a, b}, star_pos};
      a = make(std::move(node));
    }
    return a;
  }

  NodePtr parse_unary() {
    if (peek().kind == Token::Kind::Minus) {
      const std::size_t pos = next().pos;
      NodePtr a = parse_unary();
      Node node{Node::Kind::Neg, {}, 0, {}, {a}, pos};
      return make(std::move(node));
    }
    return parse_postfix();
  }

  NodePtr parse_postfix() {
    NodePtr a = parse_atom();
    while (peek().kind == Token::Kind::Caret) {
      const std::size_t pos = next().pos;
      expect(Token::Kind::Minus, "'-1'");
      const Token num = expect(Token::Kind::Number, "'-1'");
      if (num.number != Scalar(1.0, 0.0)) {
        throw ParseError("only the exponent -1 is supported", num.pos, "'-1'");
      }
      Node node{Node::Kind::Inv, {}, 0, {}, {a}, pos};
      a = make(std::move(node));
    }
    return a;
  }

  NodePtr parse_bracket_arg() {
    expect(Token::Kind::LBracket, "'['");
    NodePtr a = parse_sum();
    expect(Token::Kind::RBracket, "']'");
    return a;
  }

  NodePtr parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::Number: {
        const Token t = next();
        Node node{Node::Kind::Number, t.number, 0, {}, {}, t.pos};
        return make(std::move(node));
      }
      case Token::Kind::LParen: {
        next();
        NodePtr a = parse_sum();
        expect(Token::Kind::RParen, "')'");
        return a;
      }
      case Token::Kind::LBracket:
        return parse_matrix();
      case Token::Kind::Ident:
        return parse_ident();
      default:
        throw ParseError("unexpected " + std::string(token_name(tok.kind)),
                         tok.pos, "an expression");
    }
  }

  NodePtr parse_matrix() {
    const Token open = expect(Token::Kind::LBracket, "'['");
    Node node{Node::Kind::MatrixLit, {}, 0, {}, {}, open.pos};
    node.rows.push_back(parse_matrix_row());
    while (peek().kind == Token::Kind::Comma) {
      next();
      node.rows.push_back(parse_matrix_row());
    }
    expect(Token::Kind::RBracket, "']'");
    for (const auto& row : node.rows) {
      if (row.size() != node.rows[0].size()) {
        throw ParseError("matrix rows must have equal length", open.pos, "");
      }
    }
    return make(std::move(node));
  }

  std::vector<NodePtr> parse_matrix_row() {
    expect(Token::Kind::LBracket, "'['");
    std::vector<NodePtr> row;
    row.push_back(parse_sum());
    while (peek().kind == Token::Kind::Comma) {
      next();
      row.push_back(parse_sum());
    }
    expect(Token::Kind::RBracket, "']'");
    return row;
  }

  NodePtr parse_ident() {
    const Token t = next();
    const std::string& w = t.text;
    if (w.size() == 6 && w.compare(0, 5, "sigma") == 0 && w[5] >= '0' &&
        w[5] <= '3') {
      Node node{Node::Kind::Sigma, {}, w[5] - '0', {}, {}, t.pos};
      return make(std::move(node));
    }
    if (w == "S" || w == "L" || w == "R") {
      NodePtr arg = parse_bracket_arg();
      Node::Kind kind = w == "S"   ? Node::Kind::ShiftOp
                        : w == "L" ? Node::Kind::LeftOp
                                   : Node::Kind::RightOp;
      Node node{kind, {}, 0, {}, {arg}, t.pos};
      return make(std::move(node));
    }
    if (w == "D" || w == "T") {
      expect(Token::Kind::LParen, "'('");
      std::vector<NodePtr> args;
      args.push_back(parse_sum());
      expect(Token::Kind::Comma, "','");
      args.push_back(parse_sum());
      if (w == "T") {
        expect(Token::Kind::Comma, "','");
        args.push_back(parse_sum());
      }
      expect(Token::Kind::RParen, "')'");
      Node node{w == "D" ? Node::Kind::MakeD : Node::Kind::MakeT,
                {}, 0, {}, std::move(args), t.pos};
      return make(std::move(node));
    }
    if (w == "star") {
      expect(Token::Kind::LParen, "'('");
      NodePtr arg = parse_sum();
      expect(Token::Kind::RParen, "')'");
      Node node{Node::Kind::StarFn, {}, 0, {}, {arg}, t.pos};
      return make(std::move(node));
    }
    throw ParseError("unknown identifier '" + w + "'", t.pos,
                     "sigma0..sigma3, S, L, R, D, T, or star");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

// Binding strength, loosest first: Apply < Add < Mul < Neg < Inv < atoms.
int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Apply: return 0;
    case Node::Kind::Add: return 1;
    case Node::Kind::Mul: return 2;
    case Node::Kind::Neg: return 3;
    case Node::Kind::Inv: return 4;
    case Node::Kind::Number:
      // Literals with both parts print as re+im sums; negative or imaginary
      // ones start with '-' or need the additive form, so they bind like the
      // expression they print as.
      if (n.number.real() != 0.0 && n.number.imag() != 0.0) return 1;
      if (n.number.real() < 0.0 || n.number.imag() < 0.0) return 3;
      return 5;
    default: return 5;
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_scalar(Scalar z) {
  if (z.imag() == 0.0) return format_double(z.real());
  const std::string im = format_double(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  if (z.imag() < 0.0) {
    return format_double(z.real()) + " - " + format_double(-z.imag()) + "i";
  }
  return format_double(z.real()) + " + " + im;
}

std::string print_node(const Node& n);

std::string print_child(const Node& parent, const Node& child,
                        bool needs_stronger) {
  const int pp = precedence(parent);
  const int cp = precedence(child);
  const bool parens = needs_stronger ? cp <= pp : cp < pp;
  const std::string body = print_node(child);
  return parens ? "(" + body + ")" : body;
}

std::string print_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Number:
      return format_scalar(n.number);
    case Node::Kind::Sigma:
      return "sigma" + std::to_string(n.sigma_index);
    case Node::Kind::MatrixLit: {
      std::string out = "[";
      for (std::size_t r = 0; r < n.rows.size(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < n.rows[r].size(); ++c) {
          if (c) out += ", ";
          out += print_node(*n.rows[r][c]);
        }
        out += "]";
      }
      return out + "]";
    }
    case Node::Kind::ShiftOp: return "S[" + print_node(*n.args[0]) + "]";
    case Node::Kind::LeftOp: return "L[" + print_node(*n.args[0]) + "]";
    case Node::Kind::RightOp: return "R[" + print_node(*n.args[0]) + "]";
    case Node::Kind::MakeD:
      return "D(" + print_node(*n.args[0]) + ", " + print_node(*n.args[1]) + ")";
    case Node::Kind::MakeT:
      return "T(" + print_node(*n.args[0]) + ", " + print_node(*n.args[1]) +
             ", " + print_node(*n.args[2]) + ")";
    case Node::Kind::StarFn: return "star(" + print_node(*n.args[0]) + ")";
    case Node::Kind::Mul:
      return print_child(n, *n.args[0], false) + " * " +
             print_child(n, *n.args[1], true);
    case Node::Kind::Add: {
      // a + Neg(b) prints as a - b and parses back to the same tree.
      const Node& rhs = *n.args[1];
      if (rhs.kind == Node::Kind::Neg) {
        return print_child(n, *n.args[0], false) + " - " +
               print_child(rhs, *rhs.args[0], true);
      }
      return print_child(n, *n.args[0], false) + " + " +
             print_child(n, rhs, true);
    }
    case Node::Kind::Neg:
      return "-" + print_child(n, *n.args[0], true);
    case Node::Kind::Inv:
      return print_child(n, *n.args[0], true) + "^-1";
    case Node::Kind::Apply:
      return print_child(n, *n.args[0], false) + " @ " +
             print_child(n, *n.args[1], true);
  }
  return "?";
}

}  // namespace

NodePtr parse(const std::string& source) {
  Parser parser(source);
  return parser.parse_input();
}

std::string print(const NodePtr& node) { return print_node(*node); }

bool tree_equal(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  if (a->number != b->number) return false;
  if (a->sigma_index != b->sigma_index) return false;
  if (a->rows.size() != b->rows.size()) return false;
  for (std::size_t r = 0; r < a->rows.size(); ++r) {
    if (a->rows[r].size() != b->rows[r].size()) return false;
    for (std::size_t c = 0; c < a->rows[r].size(); ++c) {
      if (!tree_equal(a->rows[r][c], b->rows[r][c])) return false;
    }
  }
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t k = 0; k < a->args.size(); ++k) {
    if (!tree_equal(a->args[k], b->args[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

AlgebraElement to_algebra(const Value& v, std::size_t pos) {
  if (std::holds_alternative<AlgebraElement>(v)) {
    return std::get<AlgebraElement>(v);
  }
  if (std::holds_alternative<Scalar>(v)) {
    return alg_scalar_mul(std::get<Scalar>(v), unit_element(pauli_spec()));
  }
  throw EvalError("expected an algebra element, got a group element", pos);
}

Scalar eval_scalar_node(const NodePtr& n);

Value eval_node(const NodePtr& n) {
  switch (n->kind) {
    case Node::Kind::Number:
      return n->number;
    case Node::Kind::Sigma:
      return sigma(n->sigma_index);
    case Node::Kind::MatrixLit: {
      if (n->rows.size() != 2 || n->rows[0].size() != 2) {
        throw EvalError("matrix literals must be 2x2 here", n->pos);
      }
      Mat m(2, 2);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          m(r, c) = eval_scalar_node(n->rows[static_cast<std::size_t>(r)]
                                            [static_cast<std::size_t>(c)]);
        }
      }
      return from_matrix(pauli_spec(), m);
    }
    case Node::Kind::ShiftOp:
      return shift_operator(to_algebra(eval_node(n->args[0]), n->args[0]->pos));
    case Node::Kind::LeftOp: {
      AlgebraElement l = to_algebra(eval_node(n->args[0]), n->args[0]->pos);
      try {
        return left_operator(l);
      } catch (const std::domain_error& e) {
        throw EvalError(e.what(), n->pos);
      }
    }
    case Node::Kind::RightOp: {
      AlgebraElement r = to_algebra(eval_node(n->args[0]), n->args[0]->pos);
      try {
        return right_operator(r);
      } catch (const std::domain_error& e) {
        throw EvalError(e.what(), n->pos);
      }
    }
    case Node::Kind::MakeD: {
      AlgebraElement b = to_algebra(eval_node(n->args[0]), n->args[0]->pos);
      AlgebraElement l = to_algebra(eval_node(n->args[1]), n->args[1]->pos);
      try {
        return TElement(b, l, unit_element(b.spec()));
      } catch (const std::domain_error& e) {
        throw EvalError(e.what(), n->pos);
      }
    }
    case Node::Kind::MakeT: {
      AlgebraElement b = to_algebra(eval_node(n->args[0]), n->args[0]->pos);
      AlgebraElement l = to_algebra(eval_node(n->args[1]), n->args[1]->pos);
      AlgebraElement r = to_algebra(eval_node(n->args[2]), n->args[2]->pos);
      try {
        return TElement(b, l, r);
      } catch (const std::domain_error& e) {
        throw EvalError(e.what(), n->pos);
      }
    }
    case Node::Kind::StarFn: {
      Value v = eval_node(n->args[0]);
      if (std::holds_alternative<TElement>(v)) {
        return star_T(std::get<TElement>(v));
      }
      if (std::holds_alternative<AlgebraElement>(v)) {
        return star(std::get<AlgebraElement>(v));
      }
      return std::conj(std::get<Scalar>(v));
    }
    case Node::Kind::Mul: {
      Value a = eval_node(n->args[0]);
      Value b = eval_node(n->args[1]);
      if (std::holds_alternative<TElement>(a) ||
          std::holds_alternative<TElement>(b)) {
        if (!std::holds_alternative<TElement>(a) ||
            !std::holds_alternative<TElement>(b)) {
          throw EvalError("'*' cannot mix group and algebra operands", n->pos);
        }
        return compose_T(std::get<TElement>(a), std::get<TElement>(b));
      }
      if (std::holds_alternative<Scalar>(a) &&
          std::holds_alternative<Scalar>(b)) {
        return std::get<Scalar>(a) * std::get<Scalar>(b);
      }
      if (std::holds_alternative<Scalar>(a)) {
        return alg_scalar_mul(std::get<Scalar>(a), std::get<AlgebraElement>(b));
      }
      if (std::holds_alternative<Scalar>(b)) {
        return alg_scalar_mul(std::get<Scalar>(b), std::get<AlgebraElement>(a));
      }
      return alg_mul(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b));
    }
    case Node::Kind::Add: {
      Value a = eval_node(n->args[0]);
      Value b = eval_node(n->args[1]);
      if (std::holds_alternative<TElement>(a) ||
          std::holds_alternative<TElement>(b)) {
        throw EvalError("'+' is not defined for group elements", n->pos);
      }
      if (std::holds_alternative<Scalar>(a) &&
          std::holds_alternative<Scalar>(b)) {
        return std::get<Scalar>(a) + std::get<Scalar>(b);
      }
      return alg_add(to_algebra(a, n->args[0]->pos),
                     to_algebra(b, n->args[1]->pos));
    }
    case Node::Kind::Neg: {
      Value a = eval_node(n->args[0]);
      if (std::holds_alternative<TElement>(a)) {
        throw EvalError("unary '-' is not defined for group elements", n->pos);
      }
      if (std::holds_alternative<Scalar>(a)) return -std::get<Scalar>(a);
      return alg_scalar_mul(Scalar(-1.0, 0.0), std::get<AlgebraElement>(a));
    }
    case Node::Kind::Inv: {
      Value a = eval_node(n->args[0]);
      if (std::holds_alternative<TElement>(a)) {
        return invert_T(std::get<TElement>(a));
      }
      if (std::holds_alternative<Scalar>(a)) {
        Scalar z = std::get<Scalar>(a);
        if (std::abs(z) == 0.0) throw EvalError("division by zero", n->pos);
        return Scalar(1.0, 0.0) / z;
      }
      try {
        return invert(std::get<AlgebraElement>(a));
      } catch (const std::domain_error& e) {
        throw EvalError(e.what(), n->pos);
      }
    }
    case Node::Kind::Apply: {
      Value f = eval_node(n->args[0]);
      if (!std::holds_alternative<TElement>(f)) {
        throw EvalError("left side of '@' must be a group element", n->pos);
      }
      AlgebraElement a = to_algebra(eval_node(n->args[1]), n->args[1]->pos);
      return apply_T(std::get<TElement>(f), a);
    }
  }
  throw EvalError("malformed expression tree", n->pos);
}

Scalar eval_scalar_node(const NodePtr& n) {
  Value v = eval_node(n);
  if (!std::holds_alternative<Scalar>(v)) {
    throw EvalError("matrix entries must be scalars", n->pos);
  }
  return std::get<Scalar>(v);
}

}  // namespace

Value evaluate(const NodePtr& node) { return eval_node(node); }

Vec4 parse_vec4(const std::string& source) {
  Parser parser(source);
  std::vector<NodePtr> components;
  parser.parse_vec4_input(components);
  Scalar v[4];
  bool real_only = true;
  for (int k = 0; k < 4; ++k) {
    v[k] = eval_scalar_node(components[static_cast<std::size_t>(k)]);
    if (v[k].imag() != 0.0) real_only = false;
  }
  if (real_only) {
    return Vec4::real(v[0].real(), v[1].real(), v[2].real(), v[3].real());
  }
  return Vec4::complex(v[0], v[1], v[2], v[3]);
}

}  // namespace algroup::expr
