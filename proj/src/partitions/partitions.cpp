#include "dform/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dform/error.hpp"

namespace dform {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw Error("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void extend(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned k) {
  if (k < 1) throw Error("partitions_of: k must be at least 1");
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  extend(k, k, prefix, out);
  return out;
}

std::vector<Partition> covers(const Partition& p) {
  const auto& parts = p.parts();
  std::set<Partition, std::greater<>> found;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::vector<unsigned> merged;
      merged.reserve(parts.size() - 1);
      for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t != i && t != j) merged.push_back(parts[t]);
      }
      merged.push_back(parts[i] + parts[j]);
      found.emplace(std::move(merged));
    }
  }
  return {found.begin(), found.end()};
}

std::optional<std::size_t> PartitionDag::index_of(const Partition& p) const {
  auto it = std::find(nodes.begin(), nodes.end(), p);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

std::size_t PartitionDag::in_degree(std::size_t node) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const auto& e) { return e.second == node; }));
}

std::size_t PartitionDag::out_degree(std::size_t node) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const auto& e) { return e.first == node; }));
}

PartitionDag build_dag(unsigned k) {
  PartitionDag dag;
  dag.weight = k;
  dag.nodes = partitions_of(k);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) index.emplace(dag.nodes[i], i);
  // finest first, so edges come out in the diagrams' left-to-right order
  for (std::size_t i = dag.nodes.size(); i-- > 0;) {
    for (const auto& c : covers(dag.nodes[i])) dag.edges.emplace_back(i, index.at(c));
  }
  return dag;
}

std::string to_dot(const PartitionDag& dag) {
  const unsigned k = dag.weight;
  auto node_id = [](const Partition& p) {
    std::string id = "p";
    for (auto part : p.parts()) id += "_" + std::to_string(part);
    return id;
  };
  std::ostringstream os;
  os << "digraph H" << k << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (const auto& p : dag.nodes) {
    os << "  " << node_id(p) << " [label=\"H^" << k << "_{" << p.to_string()
       << "}\"];\n";
  }
  // one rank per part count, finest on the left
  std::map<std::size_t, std::vector<const Partition*>, std::greater<>> ranks;
  for (const auto& p : dag.nodes) ranks[p.size()].push_back(&p);
  for (const auto& [count, members] : ranks) {
    os << "  { rank=same;";
    for (const auto* p : members) os << ' ' << node_id(*p) << ';';
    os << " }\n";
  }
  for (const auto& [from, to] : dag.edges) {
    os << "  " << node_id(dag.nodes[from]) << " -> " << node_id(dag.nodes[to]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<std::size_t>> maximal_chains(const PartitionDag& dag) {
  std::vector<std::vector<std::size_t>> chains;
  if (dag.nodes.empty()) return chains;
  const std::size_t source = dag.nodes.size() - 1;  // {1,...,1}
  const std::size_t sink = 0;                       // {k}
  std::vector<std::vector<std::size_t>> successors(dag.nodes.size());
  for (const auto& [from, to] : dag.edges) successors[from].push_back(to);

  std::vector<std::size_t> path{source};
  std::function<void(std::size_t)> walk = [&](std::size_t node) {
    if (node == sink) {
      chains.push_back(path);
      return;
    }
    for (auto next : successors[node]) {
      path.push_back(next);
      walk(next);
      path.pop_back();
    }
  };
  walk(source);
  return chains;
}

std::vector<std::pair<Partition, Partition>> reference_diagram_edges(unsigned k) {
  using P = Partition;
  switch (k) {
    case 3:
      return {{P({1, 1, 1}), P({2, 1})}, {P({2, 1}), P({3})}};
    case 4:
      return {{P({1, 1, 1, 1}), P({2, 1, 1})},
              {P({2, 1, 1}), P({3, 1})},
              {P({2, 1, 1}), P({2, 2})},
              {P({3, 1}), P({4})},
              {P({2, 2}), P({4})}};
    case 5:
      return {{P({1, 1, 1, 1, 1}), P({2, 1, 1, 1})},
              {P({2, 1, 1, 1}), P({2, 2, 1})},
              {P({2, 1, 1, 1}), P({3, 1, 1})},
              {P({2, 2, 1}), P({4, 1})},
              {P({4, 1}), P({5})},
              {P({3, 1, 1}), P({3, 2})},
              {P({3, 2}), P({5})}};
    case 6:
      // Some arrow targets in the reference k=6 diagram are ambiguous; this
      // is the closest reading.
      return {{P({1, 1, 1, 1, 1, 1}), P({2, 1, 1, 1, 1})},
              {P({2, 1, 1, 1, 1}), P({2, 2, 1, 1})},
              {P({2, 1, 1, 1, 1}), P({3, 1, 1, 1})},
              {P({2, 2, 1, 1}), P({2, 2, 2})},
              {P({2, 2, 1, 1}), P({4, 1, 1})},
              {P({2, 2, 2}), P({4, 2})},
              {P({4, 2}), P({6})},
              {P({4, 1, 1}), P({5, 1})},
              {P({4, 1, 1}), P({4, 2})},
              {P({3, 2, 1}), P({5, 1})},
              {P({3, 2, 1}), P({4, 2})},
              {P({3, 2, 1}), P({3, 3})},
              {P({3, 3}), P({6})},
              {P({3, 1, 1, 1}), P({4, 1, 1})},
              {P({3, 1, 1, 1}), P({3, 2, 1})},
              {P({5, 1}), P({6})}};
    default:
      return {};
  }
}

std::optional<DiagramComparison> compare_with_reference(const PartitionDag& dag) {
  auto reference = reference_diagram_edges(dag.weight);
  if (reference.empty()) return std::nullopt;
  std::set<std::pair<Partition, Partition>> drawn(reference.begin(), reference.end());
  std::set<std::pair<Partition, Partition>> merges;
  for (const auto& [from, to] : dag.edges) merges.emplace(dag.nodes[from], dag.nodes[to]);

  DiagramComparison cmp;
  cmp.weight = dag.weight;
  for (const auto& [from, to] : dag.edges) {
    std::pair e{dag.nodes[from], dag.nodes[to]};
    if (!drawn.contains(e)) cmp.absent_from_reference.push_back(e);
  }
  for (const auto& e : reference) {
    if (!merges.contains(e)) cmp.not_merges.push_back(e);
  }
  return cmp;
}

}  // namespace dform
