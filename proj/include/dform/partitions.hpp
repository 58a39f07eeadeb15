#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dform {

/// Weakly decreasing list of positive parts (a Young diagram, read by rows).
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into weakly decreasing order; zero parts are rejected.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  unsigned weight() const;

  /// "m1,m2,..." as used in node labels.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of k in reverse-lexicographic order ({k} first,
/// {1,...,1} last). Throws for k < 1.
std::vector<Partition> partitions_of(unsigned k);

/// Distinct partitions obtained by merging exactly two parts of p,
/// in reverse-lexicographic order.
std::vector<Partition> covers(const Partition& p);

/// Hasse diagram of the merge-coarsening order on partitions of k.
struct PartitionDag {
  unsigned weight = 0;
  std::vector<Partition> nodes;                         // partitions_of(weight)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // node indices, finer -> coarser

  std::optional<std::size_t> index_of(const Partition& p) const;
  std::size_t in_degree(std::size_t node) const;
  std::size_t out_degree(std::size_t node) const;
};

PartitionDag build_dag(unsigned k);

/// Graphviz digraph; nodes labelled H^k_{m1,...} and ranked by part count.
std::string to_dot(const PartitionDag& dag);

/// Every path from {1,...,1} to {k}, each as a list of node indices.
std::vector<std::vector<std::size_t>> maximal_chains(const PartitionDag& dag);

/// Arrows drawn in the reference H^k_{#m} diagrams for k = 3..6, as
/// (finer, coarser) pairs. Empty for other k.
std::vector<std::pair<Partition, Partition>> reference_diagram_edges(unsigned k);

/// Comparison of the merge diagram with the reference arrows for k.
struct DiagramComparison {
  unsigned weight = 0;
  std::vector<std::pair<Partition, Partition>> absent_from_reference;
  std::vector<std::pair<Partition, Partition>> not_merges;
};

std::optional<DiagramComparison> compare_with_reference(const PartitionDag& dag);

}  // namespace dform
