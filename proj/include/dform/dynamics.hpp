#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dform/exterior.hpp"

namespace dform {

/// Polynomial vector field x_i' = components[i] on R^n.
class PhaseFlow {
 public:
  explicit PhaseFlow(std::vector<Polynomial> components);
  static PhaseFlow zero(std::size_t dim);

  std::size_t dim() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }

  PhaseFlow operator-() const;
  MultiVector as_vector_field() const;

  friend bool operator==(const PhaseFlow&, const PhaseFlow&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// Pair of scalar Hamiltonians generating a Nambu flow in R^3.
struct HamiltonianPair {
  Polynomial H;
  Polynomial F;
};

/// i_X vol, the (n-1)-form whose differential is div(X) vol.
DifferentialForm flow_to_form(const PhaseFlow& x);

Polynomial divergence(const PhaseFlow& x);

/// A form h of degree n-2 with dh = i_X vol. Throws NotDivergenceFree.
DifferentialForm vectorial_hamiltonian(const PhaseFlow& x);

/// det d(H,F,G)/d(x,y,z). Requires n = 3.
Polynomial nambu_bracket(const Polynomial& H, const Polynomial& F, const Polynomial& G);

/// x_i' = {H, F, x_i}.
PhaseFlow flow_from_hamiltonians(const HamiltonianPair& pair);

/// X(G) = sum_i x_i' dG/dx_i.
Polynomial lie_derivative(const PhaseFlow& x, const Polynomial& g);
bool is_first_integral(const PhaseFlow& x, const Polynomial& g);

/// x_i' = B -| (dF /\ dx_i) for a bivector B in R^3.
PhaseFlow bivector_flow(const MultiVector& bivector, const Polynomial& F);

/// Same contraction with an arbitrary 1-form in place of dF; components
/// are rational functions.
std::vector<RationalFunction> bivector_flow(const MultiVector& bivector,
                                            const DifferentialForm& one_form);

/// Frobenius condition dTheta /\ Theta = 0.
bool pfaff_integrable(const DifferentialForm& theta);

/// d(g Theta) = 0.
bool check_integrating_factor(const DifferentialForm& theta, const RationalFunction& g);

/// a d/dx/\d/dy + b d/dy/\d/dz + c d/dz/\d/dx in R^3.
MultiVector bivector_r3(const Polynomial& xy, const Polynomial& yz, const Polynomial& zx);

}  // namespace dform
