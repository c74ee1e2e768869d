#include "arbor/game.hpp"

#include <string>

#include "arbor/density.hpp"
#include "arbor/errors.hpp"
#include "arbor/oracle.hpp"

namespace arbor {

Rational total(const Allocation& x) {
  Rational sum = 0;
  for (const auto& [_, value] : x) sum += value;
  return sum;
}

Rational total(const Allocation& x, const EdgeSet& coalition) {
  Rational sum = 0;
  for (EdgeId e : coalition) {
    auto it = x.find(e);
    if (it == x.end()) throw InputError("allocation has no value for edge " + std::to_string(e.value));
    sum += it->second;
  }
  return sum;
}

std::int64_t gamma(const Multigraph& g, const EdgeSet& coalition) {
  if (coalition.empty()) return 0;
  return arboricity(induced_by_edges(g, coalition));
}

CoreEmptiness core_nonempty(const Multigraph& g) {
  if (!is_connected(g)) throw StructuralError("arboricity game requires a connected graph");
  CoreEmptiness result;
  result.af = fractional_arboricity(g).value;
  result.a = ceil_to_int64(result.af);
  result.nonempty = is_integer(result.af);
  return result;
}

std::string_view to_string(CoreVerdict verdict) {
  switch (verdict) {
    case CoreVerdict::member:
      return "member";
    case CoreVerdict::not_allocation:
      return "not-allocation";
    case CoreVerdict::negative_entry:
      return "negative-entry";
    case CoreVerdict::violated:
      return "violated";
  }
  return "unknown";
}

CoreCheckResult core_membership(const Multigraph& g, const Allocation& x) {
  if (x.size() != g.edge_count()) {
    throw InputError("allocation has " + std::to_string(x.size()) + " entries for " + std::to_string(g.edge_count()) +
                     " edges");
  }
  for (const auto& [e, _] : x) {
    if (!g.contains(e)) throw InputError("allocation mentions unknown edge " + std::to_string(e.value));
  }

  CoreCheckResult result;
  const SpanningTree best = max_weight_spanning_tree(g, x);
  result.max_tree_weight = best.weight;
  for (const auto& [_, value] : x) {
    if (value < 0) {
      result.verdict = CoreVerdict::negative_entry;
      return result;
    }
  }
  if (total(x) != gamma(g, g.edge_ids())) {
    result.verdict = CoreVerdict::not_allocation;
    return result;
  }
  if (best.weight > 1) {
    result.verdict = CoreVerdict::violated;
    result.witness = best.edges;
  }
  return result;
}

std::vector<Allocation> core_vertices(const Multigraph& g, std::size_t cap) {
  const CoreEmptiness status = core_nonempty(g);
  if (!status.nonempty) {
    throw PreconditionError("core is empty: af=" + to_string(status.af) + ", a=" + std::to_string(status.a));
  }
  const std::vector<VertexSet> densest = enumerate_densest_subgraphs(g);
  if (densest.size() > cap) {
    throw ResourceError(std::to_string(densest.size()) + " densest subgraphs exceed the cap of " + std::to_string(cap));
  }
  std::vector<Allocation> result;
  result.reserve(densest.size());
  for (const VertexSet& h : densest) {
    const EdgeSet inside = edges_within(g, h);
    const Rational share = make_rational(1, static_cast<std::int64_t>(h.size()) - 1);
    Allocation x;
    for (const Edge& e : g.edges()) x[e.id] = 0;
    for (EdgeId e : inside) x[e] = share;
    result.push_back(std::move(x));
  }
  return result;
}

}  // namespace arbor
