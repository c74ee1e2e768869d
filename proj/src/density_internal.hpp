#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor::detail {

/// Multigraph flattened to dense vertex indices (positions in g->vertices()).
struct LocalGraph {
  explicit LocalGraph(const Multigraph& graph);
  int vertex_count() const { return static_cast<int>(g->vertex_count()); }

  const Multigraph* g;
  std::vector<std::pair<int, int>> ends;  // parallel to g->edges()
};

struct ExcessResult {
  std::int64_t value = 0;      // max of q*m(U) - p*|U|, lambda = p/q
  std::vector<bool> members;   // the minimal maximizer U
};

/// Maximizes q*m(U) - p*|U| over vertex sets U with forced ⊆ U ⊆ allowed.
ExcessResult max_excess(const LocalGraph& lg, const Rational& lambda, std::span<const int> forced,
                        const std::vector<bool>& allowed);

/// The scaled numerator p of lambda = p/q: a connected U has density > lambda
/// iff q*m(U) - p*|U| > -p.
std::int64_t threshold_term(const Rational& lambda);

/// Component of the member set with the highest density, ties to the smallest vertex.
std::pair<Rational, std::vector<int>> densest_component(const LocalGraph& lg, const std::vector<bool>& members);

/// Root sweep over `allowed`: looks for a connected subgraph with density above
/// `lambda`. With `improve`, keeps raising `lambda` to each witness's density
/// and returns the last witness; otherwise returns the first.
std::optional<std::vector<int>> sweep_for_denser(const LocalGraph& lg, Rational& lambda, std::vector<bool> allowed,
                                                  bool improve);

VertexSet to_vertex_set(const LocalGraph& lg, std::span<const int> locals);

/// All minimal densest subgraphs given the (already known) fractional arboricity.
std::vector<VertexSet> minimal_densest_subgraphs_at(const Multigraph& g, const Rational& af);

}  // namespace arbor::detail
