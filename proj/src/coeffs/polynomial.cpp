#include "dform/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "dform/error.hpp"

namespace dform {

std::string to_string(const Rational& q) { return q.get_str(); }

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t dim, std::size_t axis,
                            std::uint32_t power) {
  Monomial m(dim);
  m.exponents_.at(axis) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  check_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_dim(dim(), other.dim());
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] += other.exponents_[i];
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] -= other.exponents_[i];
  }
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t dim, TermMap terms) : dim_(dim) {
  for (auto& [m, c] : terms) {
    check_same_dim(dim_, m.dim());
    if (c != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  if (c != 0) p.terms_.emplace(Monomial(dim), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t axis) {
  Polynomial p(dim);
  p.terms_.emplace(Monomial::variable(dim, axis), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.dim());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(dim_));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_dim(dim_, other.dim_);
  Polynomial out(*this);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_dim(dim_, other.dim_);
  Polynomial out(dim_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Rational prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(dim_);
  Polynomial out(*this);
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(dim_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  check_same_dim(dim_, point.size());
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial partial(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dim()) throw Error("partial: axis out of range");
  Polynomial::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[axis];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
    exps[axis] = e - 1;
    out.emplace(Monomial(std::move(exps)), c * e);
  }
  return Polynomial(p.dim(), std::move(out));
}

std::optional<Polynomial> exact_quotient(const Polynomial& num,
                                         const Polynomial& den) {
  check_same_dim(num.dim(), den.dim());
  if (den.is_zero()) throw DivisionByZero();
  // Division by a single polynomial: a leading term that is not divisible
  // by lt(den) can never be cancelled, so the remainder would be nonzero.
  const auto& [lead_m, lead_c] = den.leading();
  Polynomial quotient(num.dim());
  Polynomial rest = num;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading();
    if (!lead_m.divides(m)) return std::nullopt;
    Polynomial step = Polynomial::term(m / lead_m, c / lead_c);
    quotient = quotient + step;
    rest = rest - step * den;
  }
  return quotient;
}

Monomial monomial_content(const Polynomial& p) {
  std::vector<std::uint32_t> mins(p.leading().first.exponents().begin(),
                                  p.leading().first.exponents().end());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], m[i]);
  }
  return Monomial(std::move(mins));
}

}  // namespace dform
