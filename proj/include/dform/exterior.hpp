#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dform/rational_function.hpp"

namespace dform {

/// Strictly increasing tuple of 0-based axis indices labelling a basis
/// element dx_{i1} /\ ... /\ dx_{ik} (or the matching multivector basis).
class IndexTuple {
 public:
  IndexTuple() = default;
  IndexTuple(std::initializer_list<std::size_t> indices);
  explicit IndexTuple(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  std::span<const std::size_t> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool contains(std::size_t axis) const;
  /// Position of `axis` in the tuple, or nullopt.
  std::optional<std::size_t> position(std::size_t axis) const;
  IndexTuple without(std::size_t axis) const;

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Concatenates two tuples and sorts them; returns the permutation sign and
/// the sorted tuple, or nullopt when they share an index.
std::optional<std::pair<int, IndexTuple>> merge_sorted(const IndexTuple& a,
                                                       const IndexTuple& b);

/// All k-subsets of {0..n-1} in increasing lexicographic order.
std::vector<IndexTuple> basis_tuples(std::size_t n, std::size_t k);

struct FormTag {};
struct MultiVectorTag {};

/// Degree-graded antisymmetric tensor field on R^n with rational-function
/// coefficients. Instantiated as DifferentialForm and MultiVector. Degrees
/// above n are allowed and always hold the zero value.
template <class Tag>
class Graded {
 public:
  using CoeffMap = std::map<IndexTuple, RationalFunction>;

  Graded(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}
  Graded(std::size_t dim, std::size_t degree, CoeffMap coeffs);

  static Graded zero(std::size_t dim, std::size_t degree) { return Graded(dim, degree); }
  static Graded scalar(const RationalFunction& f);
  static Graded basis(std::size_t dim, const IndexTuple& index);
  /// dx_{axis} for forms, d/dx_{axis} for multivectors.
  static Graded coordinate(std::size_t dim, std::size_t axis);
  /// Degree-1 value with the given components.
  static Graded from_components(std::span<const RationalFunction> components);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_polynomial() const;
  RationalFunction coefficient(const IndexTuple& index) const;
  /// Coefficient of a degree-0 value.
  RationalFunction scalar_part() const { return coefficient(IndexTuple{}); }

  Graded operator-() const;
  Graded operator+(const Graded& o) const;
  Graded operator-(const Graded& o) const;
  Graded operator*(const RationalFunction& c) const;

  /// Substitute a point into every coefficient.
  Graded eval(std::span<const Rational> point) const;
  bool has_pole_at(std::span<const Rational> point) const;

  template <class T>
  friend bool operator==(const Graded<T>& a, const Graded<T>& b);

 private:
  std::size_t dim_;
  std::size_t degree_;
  CoeffMap coeffs_;
};

using DifferentialForm = Graded<FormTag>;
using MultiVector = Graded<MultiVectorTag>;

template <class Tag>
Graded<Tag> operator*(const RationalFunction& c, const Graded<Tag>& g) {
  return g * c;
}

template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b);

/// Wedge of a list, left to right. The empty list is not allowed.
DifferentialForm wedge_all(std::span<const DifferentialForm> factors);

DifferentialForm exterior_d(const DifferentialForm& w);

/// Contraction of a p-vector with a k-form, p <= k. For a basis p-vector
/// d/dx_{j1} /\ ... /\ d/dx_{jp} the contraction is i_{jp} o ... o i_{j1}:
/// the first factor contracts first.
DifferentialForm interior(const MultiVector& v, const DifferentialForm& w);

/// dx_1 /\ ... /\ dx_n.
DifferentialForm volume_form(std::size_t dim);

/// Constant-coefficient form obtained by evaluating every coefficient.
inline DifferentialForm eval_form(const DifferentialForm& w,
                                  std::span<const Rational> point) {
  return w.eval(point);
}

}  // namespace dform
