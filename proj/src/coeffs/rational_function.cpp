#include "dform/rational_function.hpp"

#include "dform/error.hpp"

namespace dform {

namespace {

// Scale factor making every coefficient of p an integer with overall gcd 1
// and a positive leading coefficient.
Rational primitive_scale(const Polynomial& p) {
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  if (p.leading().second < 0) scale = -scale;
  return scale;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(num_.dim(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_same_dim(num_.dim(), den_.dim());
  if (den_.is_zero()) throw DivisionByZero();
  const std::size_t n = num_.dim();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(n, 1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_ * (Rational(1) / den_.constant_term());
    den_ = Polynomial::constant(n, 1);
    return;
  }
  if (auto q = exact_quotient(num_, den_)) {
    num_ = std::move(*q);
    den_ = Polynomial::constant(n, 1);
    return;
  }
  if (auto q = exact_quotient(den_, num_)) {
    den_ = std::move(*q);
    num_ = Polynomial::constant(n, 1);
  }
  Monomial common = monomial_content(num_);
  Monomial den_common = monomial_content(den_);
  std::vector<std::uint32_t> mins(n);
  for (std::size_t i = 0; i < n; ++i) mins[i] = std::min(common[i], den_common[i]);
  Monomial shared(std::move(mins));
  if (!shared.is_one()) {
    num_ = *exact_quotient(num_, Polynomial::term(shared, 1));
    den_ = *exact_quotient(den_, Polynomial::term(shared, 1));
  }
  if (den_.is_constant()) {
    num_ = num_ * (Rational(1) / den_.constant_term());
    den_ = Polynomial::constant(n, 1);
    return;
  }
  const Rational scale = primitive_scale(den_);
  num_ = num_ * scale;
  den_ = den_ * scale;
}

const Polynomial& RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw NonPolynomialCoefficient();
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Normalized{});
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  check_same_dim(dim(), o.dim());
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  check_same_dim(dim(), o.dim());
  if (is_polynomial() && o.is_polynomial()) {
    return RationalFunction(num_ * o.num_);
  }
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  check_same_dim(dim(), o.dim());
  if (o.is_zero()) throw DivisionByZero();
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::has_pole_at(std::span<const Rational> point) const {
  return den_.eval(point) == 0;
}

Rational RationalFunction::eval(std::span<const Rational> point) const {
  Rational d = den_.eval(point);
  if (d == 0) throw PoleAtPoint();
  return num_.eval(point) / d;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.dim() != b.dim()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RationalFunction partial(const RationalFunction& f, std::size_t axis) {
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  if (f.is_polynomial()) return RationalFunction(partial(num, axis) * den.constant_term());
  return RationalFunction(partial(num, axis) * den - num * partial(den, axis),
                          den * den);
}

}  // namespace dform
