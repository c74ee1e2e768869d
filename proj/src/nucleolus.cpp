#include "arbor/nucleolus.hpp"

#include <algorithm>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

std::vector<std::int64_t> peel(const AncestorPoset& poset) {
  const std::size_t n = poset.size();
  const auto children = poset.children();
  std::vector<std::int64_t> k(n, 0);
  std::vector<std::size_t> live_children(n);
  for (std::size_t p = 0; p < n; ++p) live_children[p] = children[p].size();

  std::size_t removed = 0;
  for (std::int64_t round = 1; removed < n; ++round) {
    std::vector<std::size_t> minimal;
    for (std::size_t p = 0; p < n; ++p) {
      if (k[p] == 0 && live_children[p] == 0) minimal.push_back(p);
    }
    if (minimal.empty()) throw InvariantError("ancestor poset has a cycle");
    for (std::size_t p : minimal) {
      k[p] = round;
      for (std::size_t q : poset.parents[p]) --live_children[q];
    }
    removed += minimal.size();
  }
  return k;
}

std::vector<std::int64_t> poset_heights(const AncestorPoset& poset) {
  const auto children = poset.children();
  std::vector<std::int64_t> height(poset.size(), 0);
  std::vector<char> active(poset.size(), 0);
  auto visit = [&](auto&& self, std::size_t p) -> std::int64_t {
    if (height[p] != 0) return height[p];
    if (active[p]) throw InvariantError("ancestor poset has a cycle");
    active[p] = 1;
    std::int64_t h = 1;
    for (std::size_t c : children[p]) h = std::max(h, self(self, c) + 1);
    active[p] = 0;
    return height[p] = h;
  };
  for (std::size_t p = 0; p < poset.size(); ++p) visit(visit, p);
  return height;
}

Rational solve_epsilon(const PrimePartition& pp, const std::vector<std::int64_t>& multipliers) {
  if (pp.prime_sets.empty()) throw InputError("no prime sets to weigh");
  if (multipliers.size() != pp.prime_sets.size()) throw InputError("one multiplier per prime set expected");
  std::int64_t weight = 0;
  for (const PrimeSet& p : pp.prime_sets) {
    if (multipliers[p.id] < 1) throw InputError("multipliers must be positive");
    weight += static_cast<std::int64_t>(p.n_p - 1) * multipliers[p.id];
  }
  if (weight <= 0) throw InvariantError("prime sets carry no weight");
  return make_rational(1, weight);
}

PeelAssignment assign(const PrimePartition& pp, const AncestorPoset& poset) {
  PeelAssignment out;
  out.multipliers = peel(poset);
  if (out.multipliers != poset_heights(poset)) throw InvariantError("peeling rounds disagree with poset heights");
  out.epsilon = solve_epsilon(pp, out.multipliers);
  for (std::int64_t k : out.multipliers) out.y.push_back(k * out.epsilon);
  return out;
}

NucleolusResult nucleolus_details(const Multigraph& g, bool variant) {
  if (g.edge_count() == 0) throw InputError("graph has no edges");
  NucleolusResult r;
  r.core = core_nonempty(g);
  if (!r.core.nonempty && !variant) {
    throw PreconditionError("core empty: af=" + to_string(r.core.af) + ", a=" + std::to_string(r.core.a));
  }
  r.grand_cost = variant ? r.core.af : Rational(r.core.a);
  r.partition = prime_partition(g);
  r.poset = ancestors(g, r.partition);
  r.assignment = assign(r.partition, r.poset);
  for (const Edge& e : g.edges()) r.allocation[e.id] = 0;
  for (const PrimeSet& p : r.partition.prime_sets) {
    for (EdgeId e : p.edges) r.allocation[e] = r.assignment.y[p.id];
  }
  if (total(r.allocation) != r.grand_cost) throw InvariantError("allocation does not distribute the grand coalition cost");
  return r;
}

Allocation nucleolus(const Multigraph& g, bool variant) { return nucleolus_details(g, variant).allocation; }

bool is_tight_tree(const Multigraph& g, const PrimePartition& pp, const EdgeSet& t) {
  EdgeSet tree = t;
  normalize(tree);
  if (!is_spanning_tree(g, tree)) throw InputError("edge set is not a spanning tree");
  return std::all_of(pp.prime_sets.begin(), pp.prime_sets.end(), [&](const PrimeSet& p) {
    const auto hits = std::count_if(p.edges.begin(), p.edges.end(),
                                    [&](EdgeId e) { return std::binary_search(tree.begin(), tree.end(), e); });
    return static_cast<std::size_t>(hits) + 1 == p.n_p;
  });
}

}  // namespace arbor
