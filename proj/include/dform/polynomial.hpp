#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dform {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Exponent vector x_1^{e_1} ... x_n^{e_n}.
class Monomial {
 public:
  explicit Monomial(std::size_t dim) : exponents_(dim, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t dim, std::size_t axis,
                           std::uint32_t power = 1);

  std::size_t dim() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t axis) const { return exponents_[axis]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }
  std::uint64_t degree() const;
  bool is_one() const { return degree() == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divides(other) with this as the dividend's
  /// divisor, i.e. `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded-lexicographic order, greatest first. Iterating a map keyed with
/// this comparator yields terms in printing order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in Q[x_1..x_n]. Immutable once built; no stored
/// coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t dim) : dim_(dim) {}
  Polynomial(std::size_t dim, TermMap terms);

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t axis);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  /// Total degree; zero polynomial reports 0.
  std::uint64_t degree() const;
  /// Greatest term in graded-lex order; requires !is_zero().
  const TermMap::value_type& leading() const { return *terms_.begin(); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  Rational eval(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// Formal partial derivative with respect to x_{axis}.
Polynomial partial(const Polynomial& p, std::size_t axis);

/// Returns q with num = q * den when den divides num exactly.
std::optional<Polynomial> exact_quotient(const Polynomial& num,
                                         const Polynomial& den);

/// Largest monomial dividing every term; requires !p.is_zero().
Monomial monomial_content(const Polynomial& p);

void check_same_dim(std::size_t a, std::size_t b);

}  // namespace dform
