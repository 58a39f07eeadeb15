#include "dform/poincare.hpp"

#include <algorithm>

#include "dform/error.hpp"

namespace dform {

bool is_closed(const DifferentialForm& w) { return exterior_d(w).is_zero(); }

DifferentialForm homotopy(const DifferentialForm& w) {
  const std::size_t k = w.degree();
  const std::size_t n = w.dim();
  if (k == 0) throw DegreeMismatch("homotopy operator needs a form of degree >= 1");
  if (!w.is_polynomial()) throw NonPolynomialCoefficient();

  DifferentialForm out = DifferentialForm::zero(n, k - 1);
  for (const auto& [index, coeff] : w.coeffs()) {
    for (const auto& [mono, c] : coeff.as_polynomial().terms()) {
      // integral of t^{m+k-1} dt over [0, 1]
      const Rational weight = c / Rational(mono.degree() + k);
      DifferentialForm::CoeffMap piece;
      for (std::size_t a = 0; a < index.size(); ++a) {
        Polynomial term = Polynomial::term(mono * Monomial::variable(n, index[a]),
                                           a % 2 == 0 ? weight : Rational(-weight));
        piece.emplace(index.without(index[a]), RationalFunction(std::move(term)));
      }
      out = out + DifferentialForm(n, k - 1, std::move(piece));
    }
  }
  return out;
}

DifferentialForm exactness_witness(const DifferentialForm& w) {
  if (!w.is_polynomial()) throw NonPolynomialCoefficient();
  if (!is_closed(w)) throw NotClosed();
  DifferentialForm nu = homotopy(w);
  if (!(exterior_d(nu) == w)) {
    throw Error("internal error: homotopy potential does not reproduce the form");
  }
  return nu;
}

namespace {

SplittingCertificate certify(const DifferentialForm& omega,
                             std::vector<DifferentialForm> witnesses,
                             DifferentialForm product,
                             std::optional<Partition> partition) {
  DifferentialForm difference = omega - product;
  const bool verified = difference.is_zero();
  return SplittingCertificate{omega,
                              std::move(partition),
                              std::move(witnesses),
                              std::move(product),
                              verified,
                              std::move(difference)};
}

}  // namespace

SplittingCertificate verify_splitting(const DifferentialForm& omega,
                                      std::span<const DifferentialForm> witnesses) {
  if (witnesses.empty()) throw DegreeMismatch("splitting needs at least one witness");
  std::size_t total = 0;
  std::vector<unsigned> parts;
  std::vector<DifferentialForm> differentials;
  for (const auto& mu : witnesses) {
    check_same_dim(omega.dim(), mu.dim());
    total += mu.degree() + 1;
    parts.push_back(static_cast<unsigned>(mu.degree() + 1));
    differentials.push_back(exterior_d(mu));
  }
  if (total != omega.degree()) {
    throw DegreeMismatch("witness degrees give a " + std::to_string(total) +
                         "-form, expected " + std::to_string(omega.degree()));
  }
  return certify(omega, {witnesses.begin(), witnesses.end()}, wedge_all(differentials),
                 Partition(std::move(parts)));
}

SplittingCertificate verify_wedge_identity(const DifferentialForm& lhs,
                                           std::span<const DifferentialForm> factors) {
  if (factors.empty()) throw DegreeMismatch("wedge identity needs at least one factor");
  std::size_t total = 0;
  std::vector<unsigned> parts;
  for (const auto& f : factors) {
    check_same_dim(lhs.dim(), f.dim());
    total += f.degree();
    parts.push_back(static_cast<unsigned>(f.degree()));
  }
  if (total != lhs.degree()) {
    throw DegreeMismatch("factor degrees sum to " + std::to_string(total) +
                         ", expected " + std::to_string(lhs.degree()));
  }
  std::optional<Partition> shape;
  if (std::find(parts.begin(), parts.end(), 0u) == parts.end()) {
    shape = Partition(std::move(parts));
  }
  return certify(lhs, {factors.begin(), factors.end()}, wedge_all(factors),
                 std::move(shape));
}

bool decomposability_necessary(const DifferentialForm& w) {
  if (w.degree() != 2) throw DegreeMismatch("decomposability test expects a 2-form");
  return wedge(w, w).is_zero();
}

}  // namespace dform
