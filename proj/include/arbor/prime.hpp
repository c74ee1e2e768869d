#pragma once

#include <cstddef>
#include <vector>

#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/// Edge set of a minimal densest minor, in original edge ids.
struct PrimeSet {
  std::size_t id = 0;
  EdgeSet edges;
  int level = 0;          // number of contraction rounds before it appears
  std::size_t n_p = 0;    // vertices of its defining minimal densest subgraph
};

/// Prime sets by level plus the non-prime remainder; together they partition E(G).
struct PrimePartition {
  std::vector<PrimeSet> prime_sets;  // ids are positions; sorted by (level, min edge)
  EdgeSet non_prime;
  Rational af;

  /// Prime set holding `e`, or prime_sets.size() when e is non-prime.
  std::size_t owner_of(EdgeId e) const;
};

/// Contracts all minimal densest subgraphs round after round until the
/// fractional arboricity drops or a single vertex remains.
/// Requires g connected (StructuralError) with at least one edge (InputError).
PrimePartition prime_partition(const Multigraph& g);

/// Precedence between prime sets: Q is an ancestor of P when P's minimal
/// densest minor only appears after Q has been contracted.
struct AncestorPoset {
  std::vector<std::vector<std::size_t>> parents;    // sorted ids
  std::vector<std::vector<std::size_t>> ancestors;  // transitive, sorted ids

  std::size_t size() const noexcept { return parents.size(); }
  /// P ≺ Q: Q is an ancestor of P.
  bool precedes(std::size_t p, std::size_t q) const;
  /// Inverse of parents.
  std::vector<std::vector<std::size_t>> children() const;
};

/// Builds the poset from a parents relation, closing it transitively.
/// Throws InvariantError if the relation has a cycle.
AncestorPoset poset_from_parents(std::vector<std::vector<std::size_t>> parents);

/// Ancestor relation of `pp`; throws InputError when pp does not partition E(g).
AncestorPoset ancestors(const Multigraph& g, const PrimePartition& pp);

/// Prime sets whose union is E(G[h]) for a densest subgraph h.
/// InputError if h is not densest; InvariantError if a prime set crosses E(G[h])
/// or the vertex count identity fails.
std::vector<std::size_t> decompose_densest_subgraph(const PrimePartition& pp, const VertexSet& h, const Multigraph& g);

}  // namespace arbor
