#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dform/exterior.hpp"
#include "dform/partitions.hpp"

namespace dform {

/// Outcome of checking omega against a wedge of differentials (or of
/// arbitrary factors, see verify_wedge_identity). `difference` is always
/// omega minus the wedge, so it is zero exactly when `verified` holds.
struct SplittingCertificate {
  DifferentialForm omega;
  /// Degrees of the exact factors d(witness_i); nullopt when some factor
  /// has degree 0.
  std::optional<Partition> partition;
  std::vector<DifferentialForm> witnesses;
  DifferentialForm product;
  bool verified = false;
  DifferentialForm difference;
};

bool is_closed(const DifferentialForm& w);

/// Radial homotopy operator centred at the origin. Requires degree >= 1
/// and polynomial coefficients. Satisfies d(Kw) + K(dw) = w.
DifferentialForm homotopy(const DifferentialForm& w);

/// A potential nu with d(nu) = w for a closed polynomial form of degree
/// >= 1. Throws NotClosed or NonPolynomialCoefficient.
DifferentialForm exactness_witness(const DifferentialForm& w);

/// Checks omega = d(mu_1) /\ ... /\ d(mu_r), wedging in the given order.
/// Throws DegreeMismatch unless sum(deg mu_i + 1) = deg omega.
SplittingCertificate verify_splitting(const DifferentialForm& omega,
                                      std::span<const DifferentialForm> witnesses);

/// Checks lhs = f_1 /\ ... /\ f_r for factors that need not be exact.
SplittingCertificate verify_wedge_identity(const DifferentialForm& lhs,
                                           std::span<const DifferentialForm> factors);

/// w /\ w == 0, the pointwise condition for a 2-form to be a wedge of two
/// 1-forms.
bool decomposability_necessary(const DifferentialForm& w);

}  // namespace dform
