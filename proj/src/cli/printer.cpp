#include <cctype>

#include "dform/expression.hpp"

namespace dform {

std::string variable_name(std::size_t axis, std::size_t dim) {
  if (dim == 3) return std::string(1, "xyz"[axis]);
  return "x" + std::to_string(axis + 1);
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, m.dim());
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// Unsigned text of c*m.
std::string term_text(const Monomial& m, const Rational& c) {
  const Rational mag = abs(c);
  if (m.is_one()) return to_string(mag);
  if (mag == 1) return monomial_text(m);
  return to_string(mag) + " " + monomial_text(m);
}

// Joins signed pieces as "a - b + c".
void append_signed(std::string& out, bool negative, const std::string& piece) {
  if (out.empty()) {
    out = negative ? "-" + piece : piece;
  } else {
    out += negative ? " - " : " + ";
    out += piece;
  }
}

std::string basis_text(const IndexTuple& index, std::size_t dim, char prefix) {
  std::string out;
  for (auto axis : index) {
    if (!out.empty()) out += "/\\";
    out += prefix;
    out += variable_name(axis, dim);
  }
  return out;
}

template <class Tag>
std::string graded_text(const Graded<Tag>& g, char prefix) {
  if (g.is_zero()) return "0";
  if (g.degree() == 0) return to_string(g.scalar_part());
  std::string out;
  for (const auto& [index, c] : g.coeffs()) {
    const std::string basis = basis_text(index, g.dim(), prefix);
    if (c.is_polynomial() && c.numerator().size() == 1) {
      const auto& [m, coeff] = c.numerator().leading();
      const std::string t = term_text(m, coeff);
      append_signed(out, coeff < 0, t == "1" ? basis : t + " " + basis);
    } else {
      append_signed(out, false, "(" + to_string(c) + ") " + basis);
    }
  }
  return out;
}

// ---------------------------------------------------------- AST printing

int precedence(Ast::Kind k) {
  switch (k) {
    case Ast::Kind::Add:
    case Ast::Kind::Subtract:
      return 1;
    case Ast::Kind::Multiply:
    case Ast::Kind::Divide:
    case Ast::Kind::Wedge:
      return 2;
    case Ast::Kind::Negate:
      return 3;
    case Ast::Kind::Power:
      return 4;
    default:
      return 5;
  }
}

std::string ast_text(const Ast& a, std::size_t dim);

std::string wrapped(const Ast& child, std::size_t dim, bool parens) {
  std::string s = ast_text(child, dim);
  return parens ? "(" + s + ")" : s;
}

std::string ast_text(const Ast& a, std::size_t dim) {
  using K = Ast::Kind;
  const int prec = precedence(a.kind);
  switch (a.kind) {
    case K::Number:
      return to_string(a.value);
    case K::Variable:
      return variable_name(a.axis, dim);
    case K::Basis:
      return "d" + variable_name(a.axis, dim);
    case K::Negate: {
      const auto& c = a.children[0];
      return "-" + wrapped(c, dim, precedence(c.kind) < prec);
    }
    case K::Power: {
      const auto& c = a.children[0];
      // p/q literals need parentheses to stay a single base
      const bool parens = precedence(c.kind) <= prec ||
                          (c.kind == K::Number && c.value.get_den() != 1);
      return wrapped(c, dim, parens) + "^" + std::to_string(a.exponent);
    }
    default: {
      const auto& l = a.children[0];
      const auto& r = a.children[1];
      std::string left = wrapped(l, dim, precedence(l.kind) < prec);
      std::string right = wrapped(r, dim, precedence(r.kind) <= prec);
      const char* op = "";
      switch (a.kind) {
        case K::Add: op = " + "; break;
        case K::Subtract: op = " - "; break;
        case K::Multiply: op = "*"; break;
        case K::Divide: op = "/"; break;
        default: op = " /\\ "; break;
      }
      // keep "n/m" from fusing into a rational literal on re-parse
      if (a.kind == K::Divide && std::isdigit(static_cast<unsigned char>(left.back())) &&
          std::isdigit(static_cast<unsigned char>(right.front()))) {
        right = "(" + right + ")";
      }
      return left + op + right;
    }
  }
}

}  // namespace

std::string to_string(const Ast& ast, std::size_t dim) { return ast_text(ast, dim); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) append_signed(out, c < 0, term_text(m, c));
  return out;
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

std::string to_string(const DifferentialForm& w) { return graded_text(w, 'd'); }

std::string to_string(const MultiVector& v) { return graded_text(v, 'D'); }

std::string to_string(std::span<const RationalFunction> components) {
  bool all_zero = true;
  std::string out = "[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(components[i]);
    all_zero = all_zero && components[i].is_zero();
  }
  return all_zero ? "0" : out + "]";
}

}  // namespace dform
