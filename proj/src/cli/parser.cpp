#include <cctype>

#include "dform/error.hpp"
#include "dform/expression.hpp"

namespace dform {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Wedge, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
      push(Tok::Number, len);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (i + len < text.size() && std::isalnum(static_cast<unsigned char>(text[i + len]))) ++len;
      push(Tok::Ident, len);
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '\\') {
      push(Tok::Wedge, 2);
    } else {
      switch (c) {
        case '+': push(Tok::Plus, 1); break;
        case '-': push(Tok::Minus, 1); break;
        case '*': push(Tok::Star, 1); break;
        case '/': push(Tok::Slash, 1); break;
        case '^': push(Tok::Caret, 1); break;
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::optional<std::size_t> variable_axis(std::string_view name, std::size_t dim) {
  if (dim <= 3 && name.size() == 1) {
    const auto pos = std::string_view("xyz").find(name[0]);
    if (pos != std::string_view::npos && pos < dim) return pos;
    return std::nullopt;
  }
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
  std::size_t value = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > dim) return std::nullopt;
  }
  if (value < 1) return std::nullopt;
  return value - 1;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : tokens_(tokenize(text)), dim_(dim) {}

  Ast parse() {
    if (peek().kind == Tok::End) fail("empty expression");
    Ast a = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return a;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }

  static Ast node(Ast::Kind kind, const Token& at, std::vector<Ast> children) {
    Ast a;
    a.kind = kind;
    a.children = std::move(children);
    a.line = at.line;
    a.column = at.column;
    return a;
  }

  Ast expr() {
    Ast left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      Ast right = term();
      left = node(op.kind == Tok::Plus ? Ast::Kind::Add : Ast::Kind::Subtract, op,
                  {std::move(left), std::move(right)});
    }
    return left;
  }

  bool starts_primary() const {
    const auto k = peek().kind;
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  Ast term() {
    Ast left = unary();
    while (true) {
      Ast::Kind kind;
      const Token& at = peek();
      if (at.kind == Tok::Star) {
        kind = Ast::Kind::Multiply;
        next();
      } else if (at.kind == Tok::Slash) {
        kind = Ast::Kind::Divide;
        next();
      } else if (at.kind == Tok::Wedge) {
        kind = Ast::Kind::Wedge;
        next();
      } else if (starts_primary()) {
        kind = Ast::Kind::Multiply;
      } else {
        break;
      }
      Ast right = unary();
      left = node(kind, at, {std::move(left), std::move(right)});
    }
    return left;
  }

  Ast unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = next();
      return node(Ast::Kind::Negate, op, {unary()});
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Ast power() {
    Ast base = primary();
    if (peek().kind == Tok::Caret) {
      const Token& op = next();
      if (peek().kind != Tok::Number) fail("exponent must be a non-negative integer");
      const Token& e = next();
      if (e.text.size() > 9) throw ParseError("exponent too large", e.line, e.column);
      Ast p = node(Ast::Kind::Power, op, {std::move(base)});
      p.exponent = static_cast<std::uint32_t>(std::stoul(e.text));
      return p;
    }
    return base;
  }

  Ast primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Ast a = node(Ast::Kind::Number, t, {});
        mpz_class num(t.text);
        // integer '/' integer is a single literal unless the denominator
        // is raised to a power
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Number &&
            peek(2).kind != Tok::Caret) {
          next();
          const Token& d = next();
          mpz_class den(d.text);
          if (den == 0) throw ParseError("division by zero", d.line, d.column);
          a.value = Rational(num, den);
          a.value.canonicalize();
        } else {
          a.value = Rational(num);
        }
        return a;
      }
      case Tok::Ident: {
        next();
        Ast a = node(Ast::Kind::Variable, t, {});
        std::string_view name = t.text;
        if (auto axis = variable_axis(name, dim_)) {
          a.axis = *axis;
          return a;
        }
        if (name.size() > 1 && name[0] == 'd') {
          if (auto axis = variable_axis(name.substr(1), dim_)) {
            a.kind = Ast::Kind::Basis;
            a.axis = *axis;
            return a;
          }
        }
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
      }
      case Tok::LParen: {
        next();
        Ast inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t dim_;
};

// ------------------------------------------------------------ evaluation

[[noreturn]] void semantic_error(const Ast& at, const std::string& what) {
  throw ParseError(what, at.line, at.column);
}

bool is_scalar(const Value& v) { return std::holds_alternative<RationalFunction>(v); }

DifferentialForm as_form(const Value& v) {
  if (is_scalar(v)) return DifferentialForm::scalar(std::get<RationalFunction>(v));
  return std::get<DifferentialForm>(v);
}

Value add_values(const Ast& at, const Value& a, const Value& b) {
  if (is_scalar(a) && is_scalar(b)) {
    return std::get<RationalFunction>(a) + std::get<RationalFunction>(b);
  }
  // a zero scalar is absorbed by a form of any degree
  if (is_scalar(a) && std::get<RationalFunction>(a).is_zero()) return b;
  if (is_scalar(b) && std::get<RationalFunction>(b).is_zero()) return a;
  const auto fa = as_form(a);
  const auto fb = as_form(b);
  if (fa.degree() != fb.degree()) {
    semantic_error(at, "cannot add a " + std::to_string(fa.degree()) + "-form and a " +
                           std::to_string(fb.degree()) + "-form");
  }
  return fa + fb;
}

Value negate(const Value& v) {
  if (is_scalar(v)) return -std::get<RationalFunction>(v);
  return -std::get<DifferentialForm>(v);
}

Value eval(const Ast& a, std::size_t dim) {
  using K = Ast::Kind;
  switch (a.kind) {
    case K::Number:
      return RationalFunction::constant(dim, a.value);
    case K::Variable:
      return RationalFunction(Polynomial::variable(dim, a.axis));
    case K::Basis:
      return DifferentialForm::coordinate(dim, a.axis);
    case K::Negate:
      return negate(eval(a.children[0], dim));
    case K::Add:
      return add_values(a, eval(a.children[0], dim), eval(a.children[1], dim));
    case K::Subtract:
      return add_values(a, eval(a.children[0], dim), negate(eval(a.children[1], dim)));
    case K::Multiply: {
      Value l = eval(a.children[0], dim);
      Value r = eval(a.children[1], dim);
      if (is_scalar(l) && is_scalar(r)) {
        return std::get<RationalFunction>(l) * std::get<RationalFunction>(r);
      }
      if (is_scalar(l)) return std::get<DifferentialForm>(r) * std::get<RationalFunction>(l);
      if (is_scalar(r)) return std::get<DifferentialForm>(l) * std::get<RationalFunction>(r);
      semantic_error(a, "product of two forms; use /\\ for the wedge product");
    }
    case K::Divide: {
      Value l = eval(a.children[0], dim);
      Value r = eval(a.children[1], dim);
      if (!is_scalar(r)) semantic_error(a, "division by a form");
      const auto& den = std::get<RationalFunction>(r);
      if (den.is_zero()) semantic_error(a, "division by zero");
      const RationalFunction inv = RationalFunction::constant(dim, 1) / den;
      if (is_scalar(l)) return std::get<RationalFunction>(l) * inv;
      return std::get<DifferentialForm>(l) * inv;
    }
    case K::Power: {
      Value base = eval(a.children[0], dim);
      if (!is_scalar(base)) semantic_error(a, "power of a form");
      const auto& f = std::get<RationalFunction>(base);
      return RationalFunction(f.numerator().pow(a.exponent), f.denominator().pow(a.exponent));
    }
    case K::Wedge: {
      Value l = eval(a.children[0], dim);
      Value r = eval(a.children[1], dim);
      if (is_scalar(l) || is_scalar(r)) semantic_error(a, "wedge of non-forms");
      return wedge(std::get<DifferentialForm>(l), std::get<DifferentialForm>(r));
    }
  }
  semantic_error(a, "unknown node");
}

}  // namespace

bool operator==(const Ast& a, const Ast& b) {
  return a.kind == b.kind && a.value == b.value && a.axis == b.axis &&
         a.exponent == b.exponent && a.children == b.children;
}

Ast parse_ast(std::string_view text, std::size_t dim) {
  if (dim == 0) throw Error("ambient dimension must be positive");
  return Parser(text, dim).parse();
}

Value evaluate(const Ast& ast, std::size_t dim) { return eval(ast, dim); }

RationalFunction parse_scalar(std::string_view text, std::size_t dim) {
  Ast ast = parse_ast(text, dim);
  Value v = evaluate(ast, dim);
  if (!is_scalar(v)) throw ParseError("expected a scalar expression", ast.line, ast.column);
  return std::get<RationalFunction>(v);
}

Polynomial parse_polynomial(std::string_view text, std::size_t dim) {
  RationalFunction f = parse_scalar(text, dim);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial", 1, 1);
  return f.as_polynomial();
}

DifferentialForm parse_form(std::string_view text, std::size_t dim,
                            std::optional<std::size_t> zero_degree) {
  Value v = evaluate(parse_ast(text, dim), dim);
  if (is_scalar(v)) {
    const auto& f = std::get<RationalFunction>(v);
    if (f.is_zero() && zero_degree) return DifferentialForm::zero(dim, *zero_degree);
    return DifferentialForm::scalar(f);
  }
  return std::get<DifferentialForm>(v);
}

}  // namespace dform
