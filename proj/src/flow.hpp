#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace arbor::detail {

/// Dinic's algorithm on integer capacities.
class FlowNetwork {
 public:
  static constexpr std::int64_t infinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(int node_count);

  void add_arc(int from, int to, std::int64_t capacity);
  std::int64_t max_flow(int source, int sink);
  /// Nodes reachable from `source` in the residual graph after max_flow:
  /// the source side of the minimal minimum cut.
  std::vector<bool> source_side(int source) const;

 private:
  struct Arc {
    int to;
    std::int64_t residual;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace arbor::detail
