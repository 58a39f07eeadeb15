#include "dform/dynamics.hpp"

#include "dform/error.hpp"
#include "dform/poincare.hpp"

namespace dform {

namespace {

void require_r3(std::size_t n) {
  if (n != 3) throw Error("operation is defined in R^3 only, got n = " + std::to_string(n));
}

}  // namespace

PhaseFlow::PhaseFlow(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) check_same_dim(components_.size(), c.dim());
}

PhaseFlow PhaseFlow::zero(std::size_t dim) {
  return PhaseFlow(std::vector<Polynomial>(dim, Polynomial(dim)));
}

PhaseFlow PhaseFlow::operator-() const {
  std::vector<Polynomial> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(-c);
  return PhaseFlow(std::move(out));
}

MultiVector PhaseFlow::as_vector_field() const {
  std::vector<RationalFunction> comps(components_.begin(), components_.end());
  return MultiVector::from_components(comps);
}

DifferentialForm flow_to_form(const PhaseFlow& x) {
  return interior(x.as_vector_field(), volume_form(x.dim()));
}

Polynomial divergence(const PhaseFlow& x) {
  Polynomial sum(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) sum = sum + partial(x[i], i);
  return sum;
}

DifferentialForm vectorial_hamiltonian(const PhaseFlow& x) {
  if (!divergence(x).is_zero()) throw NotDivergenceFree();
  return exactness_witness(flow_to_form(x));
}

Polynomial nambu_bracket(const Polynomial& H, const Polynomial& F, const Polynomial& G) {
  require_r3(H.dim());
  check_same_dim(H.dim(), F.dim());
  check_same_dim(H.dim(), G.dim());
  Polynomial a[3][3] = {{partial(H, 0), partial(H, 1), partial(H, 2)},
                        {partial(F, 0), partial(F, 1), partial(F, 2)},
                        {partial(G, 0), partial(G, 1), partial(G, 2)}};
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

PhaseFlow flow_from_hamiltonians(const HamiltonianPair& pair) {
  const std::size_t n = pair.H.dim();
  require_r3(n);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    comps.push_back(nambu_bracket(pair.H, pair.F, Polynomial::variable(n, i)));
  }
  return PhaseFlow(std::move(comps));
}

Polynomial lie_derivative(const PhaseFlow& x, const Polynomial& g) {
  check_same_dim(x.dim(), g.dim());
  Polynomial sum(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) sum = sum + x[i] * partial(g, i);
  return sum;
}

bool is_first_integral(const PhaseFlow& x, const Polynomial& g) {
  return lie_derivative(x, g).is_zero();
}

std::vector<RationalFunction> bivector_flow(const MultiVector& bivector,
                                            const DifferentialForm& one_form) {
  const std::size_t n = bivector.dim();
  require_r3(n);
  if (bivector.degree() != 2) throw DegreeMismatch("bivector_flow expects a bivector");
  if (one_form.degree() != 1) throw DegreeMismatch("bivector_flow expects a 1-form");
  std::vector<RationalFunction> comps;
  for (std::size_t i = 0; i < n; ++i) {
    DifferentialForm two = wedge(one_form, DifferentialForm::coordinate(n, i));
    comps.push_back(interior(bivector, two).scalar_part());
  }
  return comps;
}

PhaseFlow bivector_flow(const MultiVector& bivector, const Polynomial& F) {
  DifferentialForm dF = exterior_d(DifferentialForm::scalar(RationalFunction(F)));
  std::vector<Polynomial> comps;
  for (const auto& c : bivector_flow(bivector, dF)) comps.push_back(c.as_polynomial());
  return PhaseFlow(std::move(comps));
}

bool pfaff_integrable(const DifferentialForm& theta) {
  if (theta.degree() != 1) throw DegreeMismatch("Pfaff condition expects a 1-form");
  return wedge(exterior_d(theta), theta).is_zero();
}

bool check_integrating_factor(const DifferentialForm& theta, const RationalFunction& g) {
  if (theta.degree() != 1) throw DegreeMismatch("integrating factor expects a 1-form");
  return is_closed(theta * g);
}

MultiVector bivector_r3(const Polynomial& xy, const Polynomial& yz, const Polynomial& zx) {
  MultiVector::CoeffMap m;
  m.emplace(IndexTuple{0, 1}, RationalFunction(xy));
  m.emplace(IndexTuple{1, 2}, RationalFunction(yz));
  m.emplace(IndexTuple{0, 2}, RationalFunction(-zx));
  return MultiVector(3, 2, std::move(m));
}

}  // namespace dform
