#pragma once

#include <cstdint>
#include <vector>

#include "arbor/game.hpp"
#include "arbor/multigraph.hpp"
#include "arbor/prime.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/// Multiplier k_P per prime set id from removing minimal elements round by
/// round (an element removed in round k gets k). InvariantError on a cycle.
std::vector<std::int64_t> peel(const AncestorPoset& poset);

/// Same multipliers as heights: 1 + the largest height among descendants.
std::vector<std::int64_t> poset_heights(const AncestorPoset& poset);

/// 1 / sum over prime sets of (n_p - 1) * k_P. InputError without prime sets.
Rational solve_epsilon(const PrimePartition& pp, const std::vector<std::int64_t>& multipliers);

struct PeelAssignment {
  std::vector<std::int64_t> multipliers;  // per prime set id
  Rational epsilon;
  std::vector<Rational> y;                // k_P * epsilon per prime set id
};

PeelAssignment assign(const PrimePartition& pp, const AncestorPoset& poset);

struct NucleolusResult {
  CoreEmptiness core;
  Rational grand_cost;  // gamma(E), or a_f in variant mode
  PrimePartition partition;
  AncestorPoset poset;
  PeelAssignment assignment;
  Allocation allocation;
};

/// Nucleolus of the arboricity game by peeling the ancestor poset.
/// Without `variant`, an empty core is a PreconditionError. With it the cost of
/// the grand coalition is a_f and the same formulas apply.
NucleolusResult nucleolus_details(const Multigraph& g, bool variant = false);
Allocation nucleolus(const Multigraph& g, bool variant = false);

/// |t ∩ P| = n_p - 1 for every prime set P. InputError if t is not a spanning tree.
bool is_tight_tree(const Multigraph& g, const PrimePartition& pp, const EdgeSet& t);

}  // namespace arbor
