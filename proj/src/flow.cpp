#include "flow.hpp"

#include <algorithm>
#include <queue>

namespace arbor::detail {

FlowNetwork::FlowNetwork(int node_count) : out_(static_cast<std::size_t>(node_count)) {}

void FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back(Arc{to, capacity});
  out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back(Arc{from, 0});
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(out_.size(), -1);
  std::queue<int> frontier;
  level_[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int a : out_[static_cast<std::size_t>(u)]) {
      const Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.residual > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
        frontier.push(arc.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t FlowNetwork::push(int node, int sink, std::int64_t limit) {
  if (node == sink) return limit;
  const auto u = static_cast<std::size_t>(node);
  for (std::size_t& i = cursor_[u]; i < out_[u].size(); ++i) {
    const int a = out_[u][i];
    Arc& arc = arcs_[static_cast<std::size_t>(a)];
    if (arc.residual <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[u] + 1) continue;
    const std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[static_cast<std::size_t>(a ^ 1)].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(out_.size(), 0);
    while (const std::int64_t pushed = push(source, sink, infinite)) total += pushed;
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(out_.size(), false);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int a : out_[static_cast<std::size_t>(u)]) {
      const Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.residual > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
        seen[static_cast<std::size_t>(arc.to)] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace arbor::detail
