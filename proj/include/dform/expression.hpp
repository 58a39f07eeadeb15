#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dform/exterior.hpp"

namespace dform {

/// Parsed expression tree.
///
/// Grammar (whitespace-insensitive, juxtaposition is multiplication):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/' | '/\' | <juxtaposition>) unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' nat)?
///   primary := nat ['/' nat] | var | 'd' var | '(' expr ')'
///   var     := 'x' nat | 'x' | 'y' | 'z'
///
/// `p/q` between two integer literals is one rational literal, so
/// `1/2 x^2` reads as (1/2)*x^2.
struct Ast {
  enum class Kind {
    Number,    // non-negative rational literal
    Variable,  // x_axis
    Basis,     // dx_axis
    Negate,
    Add,
    Subtract,
    Multiply,
    Divide,
    Power,
    Wedge,
  };

  Kind kind = Kind::Number;
  Rational value;
  std::size_t axis = 0;
  std::uint32_t exponent = 0;
  std::vector<Ast> children;
  std::size_t line = 1;
  std::size_t column = 1;

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Ast& a, const Ast& b);
};

/// Variables are x1..xn; x, y, z are accepted as aliases of x1, x2, x3
/// when n <= 3.
Ast parse_ast(std::string_view text, std::size_t dim);

/// Re-parsable text for the tree: parse_ast(to_string(a)) == a.
std::string to_string(const Ast& ast, std::size_t dim);

using Value = std::variant<RationalFunction, DifferentialForm>;

Value evaluate(const Ast& ast, std::size_t dim);

RationalFunction parse_scalar(std::string_view text, std::size_t dim);
/// Like parse_scalar but rejects non-polynomial results.
Polynomial parse_polynomial(std::string_view text, std::size_t dim);
/// A scalar result becomes a 0-form; a zero scalar takes `zero_degree` when
/// given.
DifferentialForm parse_form(std::string_view text, std::size_t dim,
                            std::optional<std::size_t> zero_degree = std::nullopt);

/// "x", "y", "z" in R^3; "x1".."xn" otherwise.
std::string variable_name(std::size_t axis, std::size_t dim);

// Canonical printing. Terms come out in graded-lex order, basis elements in
// increasing index order, and the text parses back to an equal value.
std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& f);
std::string to_string(const DifferentialForm& w);
/// Display only: basis bivectors print as Dx/\Dy.
std::string to_string(const MultiVector& v);
/// "[c1, c2, ...]", or "0" when every component is zero.
std::string to_string(std::span<const RationalFunction> components);

}  // namespace dform
