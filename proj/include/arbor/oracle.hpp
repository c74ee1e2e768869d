#pragma once

// Exhaustive reference implementations for small graphs. They share no code
// with the flow-based routines and exist to cross-check them.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arbor/game.hpp"
#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor {

struct BruteArboricity {
  Rational value;
  VertexSet witness;  // endpoints of the first densest connected edge subset
};

/// Maximum density over all connected edge subsets. ResourceError past `edge_cap` edges.
BruteArboricity brute_fractional_arboricity(const Multigraph& g, std::size_t edge_cap = 14);

/// All vertex sets inducing a connected subgraph of maximum density, in
/// lexicographic order. ResourceError past `vertex_cap` vertices.
std::vector<VertexSet> enumerate_densest_subgraphs(const Multigraph& g, std::size_t vertex_cap = 16);

/// The characteristic function tabulated over every coalition. Bit i of a mask
/// stands for the i-th edge in ascending id order.
class CoalitionTable {
 public:
  /// ResourceError past `edge_cap` edges.
  CoalitionTable(const Multigraph& g, std::size_t edge_cap);

  std::size_t players() const noexcept { return players_.size(); }
  EdgeId player(std::size_t i) const { return players_.at(i); }
  std::uint32_t grand() const noexcept { return static_cast<std::uint32_t>(gamma_.size() - 1); }
  std::int64_t gamma(std::uint32_t mask) const { return gamma_.at(mask); }
  /// Maximum density over connected edge subsets of the mask; 0 when empty.
  const Rational& max_density(std::uint32_t mask) const { return density_.at(mask); }

  /// x as a vector indexed by player; InputError if x does not match the edges.
  std::vector<Rational> payoffs(const Allocation& x) const;

 private:
  std::vector<EdgeId> players_;
  std::vector<std::int64_t> gamma_;
  std::vector<Rational> density_;
};

/// Core membership by checking every coalition.
bool brute_core_check(const Multigraph& g, const Allocation& x, std::size_t edge_cap = 14);

/// Excesses gamma(S) - x(S) over nonempty proper coalitions, sorted ascending.
std::vector<Rational> excess_vector(const CoalitionTable& table, const Allocation& x);

/// Nucleolus by Maschler's sequence of linear programs.
/// PreconditionError if the core is empty, StructuralError if g is disconnected,
/// ResourceError past `edge_cap` edges.
Allocation maschler_nucleolus(const Multigraph& g, std::size_t edge_cap = 10);

}  // namespace arbor
