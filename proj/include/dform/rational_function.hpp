#pragma once

#include <cstddef>
#include <span>

#include "dform/polynomial.hpp"

namespace dform {

/// Element of Q(x_1..x_n) stored as numerator/denominator.
///
/// Fractions are not reduced by a multivariate gcd. Construction clears
/// constant denominators, exact polynomial quotients and common monomial
/// factors, then scales so the denominator has coprime integer
/// coefficients with a positive leading coefficient. Equality is decided
/// by cross-multiplication, so two equal values may print differently.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t dim)
      : num_(dim), den_(Polynomial::constant(dim, 1)) {}
  RationalFunction(Polynomial p);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(std::size_t dim, const Rational& c) {
    return RationalFunction(Polynomial::constant(dim, c));
  }

  std::size_t dim() const { return num_.dim(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_polynomial().
  const Polynomial& as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;

  /// Throws PoleAtPoint when the denominator vanishes.
  Rational eval(std::span<const Rational> point) const;
  bool has_pole_at(std::span<const Rational> point) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Quotient rule: (num' den - num den') / den^2.
RationalFunction partial(const RationalFunction& f, std::size_t axis);

}  // namespace dform
