#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dform/partitions.hpp"
#include "oracles.hpp"

namespace dform {
namespace {

using P = Partition;

TEST(Partition, NormalisesOrder) {
  EXPECT_EQ(P({1, 2, 1}).parts(), (std::vector<unsigned>{2, 1, 1}));
  EXPECT_EQ(P({2, 1, 1}).weight(), 4u);
  EXPECT_EQ(P({2, 1, 1}).to_string(), "2,1,1");
  EXPECT_THROW(P({2, 0}), std::exception);
}

TEST(PartitionsOf, Examples) {
  EXPECT_EQ(partitions_of(3), (std::vector<P>{P({3}), P({2, 1}), P({1, 1, 1})}));
  EXPECT_EQ(partitions_of(4), (std::vector<P>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})}));
  EXPECT_EQ(partitions_of(1), (std::vector<P>{P({1})}));
  EXPECT_THROW(partitions_of(0), std::exception);
}

TEST(Covers, Examples) {
  EXPECT_EQ(covers(P({2, 1, 1})), (std::vector<P>{P({3, 1}), P({2, 2})}));
  EXPECT_TRUE(covers(P({5})).empty());
  EXPECT_EQ(covers(P({2, 2, 1})), (std::vector<P>{P({4, 1}), P({3, 2})}));
}

std::set<std::pair<std::string, std::string>> edge_labels(const PartitionDag& dag) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : dag.edges) out.emplace(dag.nodes[a].to_string(), dag.nodes[b].to_string());
  return out;
}

TEST(BuildDag, Examples) {
  const auto d3 = build_dag(3);
  EXPECT_EQ(edge_labels(d3), (std::set<std::pair<std::string, std::string>>{{"1,1,1", "2,1"}, {"2,1", "3"}}));

  const auto d4 = build_dag(4);
  EXPECT_EQ(d4.nodes.size(), 5u);
  EXPECT_EQ(edge_labels(d4), (std::set<std::pair<std::string, std::string>>{
                                 {"1,1,1,1", "2,1,1"}, {"2,1,1", "3,1"}, {"2,1,1", "2,2"}, {"3,1", "4"}, {"2,2", "4"}}));

  const auto d5 = build_dag(5);
  EXPECT_EQ(d5.nodes.size(), 7u);
  EXPECT_EQ(d5.edges.size(), 9u);

  EXPECT_EQ(build_dag(6).nodes.size(), 11u);
}

TEST(ToDot, Examples) {
  const std::string dot3 = to_dot(build_dag(3));
  EXPECT_EQ(dot3.rfind("digraph", 0), 0u);
  EXPECT_NE(dot3.find("label=\"H^3_{2,1}\""), std::string::npos);
  EXPECT_EQ(std::count(dot3.begin(), dot3.end(), '>'), 2);
  EXPECT_EQ(std::count(dot3.begin(), dot3.end(), '\n') > 0, true);

  const std::string dot1 = to_dot(build_dag(1));
  EXPECT_NE(dot1.find("H^1_{1}"), std::string::npos);
  EXPECT_EQ(dot1.find("->"), std::string::npos);
}

TEST(MaximalChains, Examples) {
  EXPECT_EQ(maximal_chains(build_dag(3)).size(), 1u);
  EXPECT_EQ(maximal_chains(build_dag(4)).size(), 2u);
  const auto c1 = maximal_chains(build_dag(1));
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].size(), 1u);
}

TEST(ReferenceDiagram, Comparison) {
  for (unsigned k : {3u, 4u}) {
    const auto cmp = compare_with_reference(build_dag(k));
    ASSERT_TRUE(cmp.has_value());
    EXPECT_TRUE(cmp->absent_from_reference.empty()) << k;
    EXPECT_TRUE(cmp->not_merges.empty()) << k;
  }
  const auto c5 = compare_with_reference(build_dag(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->absent_from_reference.size(), 2u);
  const auto c6 = compare_with_reference(build_dag(6));
  ASSERT_TRUE(c6.has_value());
  EXPECT_FALSE(c6->absent_from_reference.empty());
  EXPECT_FALSE(compare_with_reference(build_dag(7)).has_value());
}

// Properties ------------------------------------------------------------

TEST(PartitionProperties, CountsMatchEulerRecurrence) {
  const auto p = testing::euler_partition_counts(40);
  for (unsigned k = 1; k <= 40; ++k) EXPECT_EQ(partitions_of(k).size(), p[k]) << k;
}

/// All partitions obtained by merging two parts, by brute force over
/// index pairs.
std::set<P> brute_force_covers(const P& p) {
  std::set<P> out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::vector<unsigned> next;
      for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t != i && t != j) next.push_back(parts[t]);
      }
      next.push_back(parts[i] + parts[j]);
      out.insert(P(next));
    }
  }
  return out;
}

TEST(PartitionProperties, DagStructure) {
  for (unsigned k = 1; k <= 12; ++k) {
    const auto dag = build_dag(k);
    const std::size_t n = dag.nodes.size();
    std::size_t sources = 0, sinks = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (dag.in_degree(i) == 0) {
        ++sources;
        EXPECT_EQ(dag.nodes[i], P(std::vector<unsigned>(k, 1)));
      }
      if (dag.out_degree(i) == 0) {
        ++sinks;
        EXPECT_EQ(dag.nodes[i], P({k}));
      }
      const auto cv = covers(dag.nodes[i]);
      EXPECT_EQ(std::set<P>(cv.begin(), cv.end()), brute_force_covers(dag.nodes[i]));
    }
    EXPECT_EQ(sources, 1u);
    EXPECT_EQ(sinks, 1u);
    for (const auto& [a, b] : dag.edges) EXPECT_EQ(dag.nodes[a].size(), dag.nodes[b].size() + 1);

    // reachability from the source and to the sink
    std::vector<bool> from_source(n, false), to_sink(n, false);
    const std::size_t src = *dag.index_of(P(std::vector<unsigned>(k, 1)));
    const std::size_t snk = *dag.index_of(P({k}));
    from_source[src] = true;
    to_sink[snk] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [a, b] : dag.edges) {
        if (from_source[a] && !from_source[b]) from_source[b] = changed = true;
        if (to_sink[b] && !to_sink[a]) to_sink[a] = changed = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(from_source[i] && to_sink[i]) << k << " " << i;

    const auto chains = maximal_chains(dag);
    if (k == 3) EXPECT_EQ(chains.size(), 1u);
    if (k >= 4) EXPECT_GE(chains.size(), 2u);
  }
}

}  // namespace
}  // namespace dform
