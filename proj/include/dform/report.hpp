#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "dform/partitions.hpp"
#include "dform/poincare.hpp"

namespace dform {

enum class ClaimKind { Identity, Closedness, Splitting, Pfaff, Conservation, PartitionDag };

std::string_view to_string(ClaimKind kind);

/// Anything a claim can compare: a scalar, a form, or a component list
/// (a flow).
using Quantity =
    std::variant<RationalFunction, DifferentialForm, std::vector<RationalFunction>>;

std::string to_string(const Quantity& q);

struct PointCheck {
  std::vector<Rational> point;
  std::string lhs_value;
  std::string rhs_value;

  bool agrees() const { return lhs_value == rhs_value; }
};

/// Outcome of one verification claim. `equal` is the exact symbolic verdict;
/// point checks corroborate it by substitution.
struct Report {
  std::string claim_id;
  ClaimKind kind = ClaimKind::Identity;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  std::string difference;
  std::optional<Partition> partition;
  std::vector<PointCheck> point_checks;

  /// True when every point check agrees.
  bool numerically_equal() const;
  /// The point checks point the same way as the symbolic verdict.
  bool corroborated() const;
};

inline constexpr std::size_t kPointChecks = 20;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Deterministic stream of random rational points. Draws use the raw
/// mt19937_64 output, which is fully specified, so results are stable
/// across standard libraries.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed = kDefaultSeed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  /// Numerators in [-30, 30], denominators in [1, 12].
  std::vector<Rational> draw(std::size_t dim);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Builds a report for lhs = rhs, with kPointChecks distinct points that
/// avoid every pole of either side.
Report compare_quantities(std::string claim_id, ClaimKind kind, const Quantity& lhs,
                          const Quantity& rhs, PointSampler& sampler,
                          std::optional<Partition> partition = std::nullopt);

/// lhs = omega, rhs = product of the certificate.
Report report_from_certificate(std::string claim_id, ClaimKind kind,
                               const SplittingCertificate& cert, PointSampler& sampler);

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

/// Every claim checked for built-in example `id` (1, 2 or 3).
std::vector<Report> run_example_suite(int id, PointSampler& sampler);

}  // namespace dform
