#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dform/exterior.hpp"
#include "dform/polynomial.hpp"
#include "dform/rational_function.hpp"

namespace dform::testing {

/// Hand-rolled random generators for property tests. Every draw comes from
/// one seeded mt19937_64, so failures reproduce from the seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  bool coin() { return integer(0, 1) == 1; }

  Rational rational(std::int64_t num_bound = 9, std::int64_t den_bound = 5) {
    Rational q(mpz_class(static_cast<long>(integer(-num_bound, num_bound))),
               mpz_class(static_cast<long>(integer(1, den_bound))));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational() {
    Rational q = rational();
    while (q == 0) q = rational();
    return q;
  }

  Monomial monomial(std::size_t dim, std::uint32_t max_degree) {
    std::vector<std::uint32_t> e(dim, 0);
    const auto total = static_cast<std::uint32_t>(integer(0, max_degree));
    for (std::uint32_t i = 0; i < total && dim > 0; ++i) ++e[index(0, dim - 1)];
    return Monomial(std::move(e));
  }

  Polynomial polynomial(std::size_t dim, std::uint32_t max_degree = 3, std::size_t max_terms = 4) {
    Polynomial p(dim);
    const std::size_t terms = index(0, max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
      p = p + Polynomial::term(monomial(dim, max_degree), rational());
    }
    return p;
  }

  Polynomial nonzero_polynomial(std::size_t dim, std::uint32_t max_degree = 3) {
    Polynomial p = polynomial(dim, max_degree);
    while (p.is_zero()) p = polynomial(dim, max_degree);
    return p;
  }

  /// 1 + (sum of squares), which has no real zeros.
  Polynomial positive_polynomial(std::size_t dim) {
    Polynomial p = Polynomial::constant(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) {
      if (coin()) p = p + Polynomial::variable(dim, i).pow(2) * Rational(static_cast<long>(integer(1, 3)));
    }
    return p;
  }

  RationalFunction rational_function(std::size_t dim) {
    return RationalFunction(polynomial(dim, 2, 3), positive_polynomial(dim));
  }

  /// Nonzero whenever degree <= dim.
  DifferentialForm polynomial_form(std::size_t dim, std::size_t degree,
                                   std::uint32_t max_degree = 3) {
    DifferentialForm::CoeffMap c;
    const auto tuples = basis_tuples(dim, degree);
    for (const auto& idx : tuples) {
      if (coin()) c.emplace(idx, RationalFunction(polynomial(dim, max_degree, 3)));
    }
    DifferentialForm w(dim, degree, std::move(c));
    if (w.is_zero() && !tuples.empty()) {
      w = DifferentialForm::basis(dim, tuples[index(0, tuples.size() - 1)]) *
          RationalFunction(nonzero_polynomial(dim, max_degree));
    }
    return w;
  }

  DifferentialForm rational_form(std::size_t dim, std::size_t degree) {
    DifferentialForm::CoeffMap c;
    for (const auto& idx : basis_tuples(dim, degree)) {
      if (coin()) c.emplace(idx, rational_function(dim));
    }
    return DifferentialForm(dim, degree, std::move(c));
  }

  MultiVector polynomial_multivector(std::size_t dim, std::size_t degree) {
    MultiVector::CoeffMap c;
    for (const auto& idx : basis_tuples(dim, degree)) {
      if (coin()) c.emplace(idx, RationalFunction(polynomial(dim, 2, 3)));
    }
    return MultiVector(dim, degree, std::move(c));
  }

  std::vector<Rational> point(std::size_t dim) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < dim; ++i) p.push_back(rational(30, 12));
    return p;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline int parity_sign(std::size_t a) { return a % 2 == 0 ? 1 : -1; }

}  // namespace dform::testing
