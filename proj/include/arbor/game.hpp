#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/// Payoff per player (edge) of the arboricity game.
using Allocation = std::map<EdgeId, Rational>;

Rational total(const Allocation& x);
/// x(S)
Rational total(const Allocation& x, const EdgeSet& coalition);

/// Characteristic function: arboricity of the edge-induced subgraph, 0 for the empty coalition.
std::int64_t gamma(const Multigraph& g, const EdgeSet& coalition);

struct CoreEmptiness {
  bool nonempty = false;
  Rational af;
  std::int64_t a = 0;
};

/// The core is nonempty exactly when the fractional arboricity is an integer.
CoreEmptiness core_nonempty(const Multigraph& g);

enum class CoreVerdict { member, not_allocation, negative_entry, violated };

std::string_view to_string(CoreVerdict verdict);

struct CoreCheckResult {
  CoreVerdict verdict = CoreVerdict::member;
  std::optional<EdgeSet> witness;  // spanning tree with x(T) > 1 when violated
  Rational max_tree_weight;        // max over spanning trees of x(T)
};

/// Core test through spanning trees: x >= 0, x(E) = gamma(E), max_T x(T) <= 1.
/// InputError if x does not assign exactly the edges of g.
CoreCheckResult core_membership(const Multigraph& g, const Allocation& x);

/// Extreme points of the core: for each densest subgraph H, 1/(n(H)-1) on E(H).
/// PreconditionError when the core is empty; ResourceError past `cap` subgraphs.
std::vector<Allocation> core_vertices(const Multigraph& g, std::size_t cap);

}  // namespace arbor
