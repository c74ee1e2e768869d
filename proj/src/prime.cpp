#include "arbor/prime.hpp"

#include <algorithm>
#include <string>

#include "arbor/density.hpp"
#include "arbor/errors.hpp"
#include "density_internal.hpp"
#include "disjoint_sets.hpp"

namespace arbor {

std::size_t PrimePartition::owner_of(EdgeId e) const {
  for (const PrimeSet& p : prime_sets) {
    if (std::binary_search(p.edges.begin(), p.edges.end(), e)) return p.id;
  }
  return prime_sets.size();
}

PrimePartition prime_partition(const Multigraph& g) {
  if (g.edge_count() == 0) throw InputError("prime partition of an edgeless graph");
  if (!is_connected(g)) throw StructuralError("prime partition requires a connected graph");

  PrimePartition pp;
  pp.af = fractional_arboricity(g).value;

  ContractionView view = contract(g, {});
  for (int level = 0;; ++level) {
    const Multigraph minor = view.minor();
    if (minor.edge_count() == 0) break;
    if (level > 0) {
      const Rational current = fractional_arboricity(minor).value;
      if (current > pp.af) throw InvariantError("contraction increased the fractional arboricity");
      if (current < pp.af) {
        pp.non_prime = minor.edge_ids();
        break;
      }
    }
    const std::vector<VertexSet> minimal = detail::minimal_densest_subgraphs_at(minor, pp.af);
    if (minimal.empty()) throw InvariantError("no minimal densest subgraph at level " + std::to_string(level));

    EdgeSet contracted;
    for (const VertexSet& h : minimal) {
      PrimeSet p;
      p.edges = edges_within(minor, h);
      p.level = level;
      p.n_p = h.size();
      contracted.insert(contracted.end(), p.edges.begin(), p.edges.end());
      pp.prime_sets.push_back(std::move(p));
    }
    view = contract(view, std::move(contracted));
  }

  std::sort(pp.prime_sets.begin(), pp.prime_sets.end(), [](const PrimeSet& a, const PrimeSet& b) {
    return a.level != b.level ? a.level < b.level : a.edges.front() < b.edges.front();
  });
  for (std::size_t i = 0; i < pp.prime_sets.size(); ++i) pp.prime_sets[i].id = i;
  return pp;
}

// ---------------------------------------------------------------------------

bool AncestorPoset::precedes(std::size_t p, std::size_t q) const {
  const auto& a = ancestors.at(p);
  return std::binary_search(a.begin(), a.end(), q);
}

std::vector<std::vector<std::size_t>> AncestorPoset::children() const {
  std::vector<std::vector<std::size_t>> result(parents.size());
  for (std::size_t p = 0; p < parents.size(); ++p) {
    for (std::size_t q : parents[p]) result[q].push_back(p);
  }
  return result;
}

namespace {

// Ancestor sets from a direct "must precede" relation, by depth-first closure.
std::vector<std::vector<std::size_t>> transitive_closure(const std::vector<std::vector<std::size_t>>& direct) {
  const std::size_t n = direct.size();
  std::vector<std::vector<std::size_t>> closure(n);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  auto visit = [&](auto&& self, std::size_t p) -> void {
    if (state[p] == 2) return;
    if (state[p] == 1) throw InvariantError("ancestor relation has a cycle through prime set " + std::to_string(p));
    state[p] = 1;
    std::vector<std::size_t> acc;
    for (std::size_t q : direct[p]) {
      if (q >= n) throw InputError("parent id " + std::to_string(q) + " out of range");
      self(self, q);
      acc.push_back(q);
      acc.insert(acc.end(), closure[q].begin(), closure[q].end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    closure[p] = std::move(acc);
    state[p] = 2;
  };
  for (std::size_t p = 0; p < n; ++p) visit(visit, p);
  return closure;
}

}  // namespace

AncestorPoset poset_from_parents(std::vector<std::vector<std::size_t>> parents) {
  AncestorPoset poset;
  poset.ancestors = transitive_closure(parents);
  for (auto& list : parents) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  poset.parents = std::move(parents);
  return poset;
}

AncestorPoset ancestors(const Multigraph& g, const PrimePartition& pp) {
  // The partition must cover E(g) exactly once.
  std::vector<int> seen(g.edge_count(), 0);
  auto mark = [&](const EdgeSet& edges) {
    for (EdgeId e : edges) {
      if (!g.contains(e)) throw InputError("partition mentions edge " + std::to_string(e.value) + " not in the graph");
      ++seen[g.index_of(e)];
    }
  };
  for (const PrimeSet& p : pp.prime_sets) mark(p.edges);
  mark(pp.non_prime);
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw InputError("prime partition does not partition the edge set of the graph");
  }

  const std::size_t count = pp.prime_sets.size();
  int top = 0;
  for (const PrimeSet& p : pp.prime_sets) top = std::max(top, p.level);

  // Number of images spanned by P once the listed prime sets are contracted.
  auto image_count = [&](detail::DisjointSets& sets, const PrimeSet& p) {
    std::vector<std::size_t> roots;
    for (EdgeId id : p.edges) {
      const Edge& e = g.edge(id);
      roots.push_back(sets.find(g.index_of(e.u)));
      roots.push_back(sets.find(g.index_of(e.v)));
    }
    std::sort(roots.begin(), roots.end());
    return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
  };
  auto contract_below = [&](int level, const std::vector<bool>& skip) {
    detail::DisjointSets sets(g.vertex_count());
    for (const PrimeSet& q : pp.prime_sets) {
      if (q.level >= level || skip[q.id]) continue;
      for (EdgeId id : q.edges) {
        const Edge& e = g.edge(id);
        sets.unite(g.index_of(e.u), g.index_of(e.v));
      }
    }
    return sets;
  };

  // Q is an ancestor of P (level L) when removing Q, together with everything
  // below L that needs Q, leaves P spread over a different number of images.
  // Levels are handled in order so the descendants of Q are already known.
  AncestorPoset poset;
  poset.ancestors.resize(count);
  poset.parents.resize(count);
  for (int level = 1; level <= top; ++level) {
    detail::DisjointSets baseline = contract_below(level, std::vector<bool>(count, false));
    std::vector<std::size_t> expected(count, 0);
    for (const PrimeSet& p : pp.prime_sets) {
      if (p.level == level) expected[p.id] = image_count(baseline, p);
    }
    for (const PrimeSet& q : pp.prime_sets) {
      if (q.level >= level) continue;
      std::vector<bool> skip(count, false);
      skip[q.id] = true;
      for (const PrimeSet& r : pp.prime_sets) {
        const auto& up = poset.ancestors[r.id];
        if (r.level < level && std::binary_search(up.begin(), up.end(), q.id)) skip[r.id] = true;
      }
      detail::DisjointSets without = contract_below(level, skip);
      for (const PrimeSet& p : pp.prime_sets) {
        if (p.level == level && image_count(without, p) != expected[p.id]) poset.ancestors[p.id].push_back(q.id);
      }
    }
    for (const PrimeSet& p : pp.prime_sets) {
      if (p.level != level) continue;
      auto& mine = poset.ancestors[p.id];
      const std::vector<std::size_t> found = mine;
      for (std::size_t q : found) mine.insert(mine.end(), poset.ancestors[q].begin(), poset.ancestors[q].end());
      std::sort(mine.begin(), mine.end());
      mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    }
  }

  for (std::size_t p = 0; p < count; ++p) {
    const auto& mine = poset.ancestors[p];
    for (std::size_t q : mine) {
      if (pp.prime_sets[q].level >= pp.prime_sets[p].level) {
        throw InvariantError("ancestor at a level not below its descendant");
      }
      // A parent is an ancestor that is not an ancestor of another ancestor.
      const bool covered = std::any_of(mine.begin(), mine.end(), [&](std::size_t r) {
        return r != q && std::binary_search(poset.ancestors[r].begin(), poset.ancestors[r].end(), q);
      });
      if (!covered) poset.parents[p].push_back(q);
    }
  }
  return poset;
}

std::vector<std::size_t> decompose_densest_subgraph(const PrimePartition& pp, const VertexSet& h, const Multigraph& g) {
  VertexSet vertices = h;
  normalize(vertices);
  const Multigraph sub = induced_by_vertices(g, vertices);
  if (!is_connected(sub) || sub.edge_count() == 0 || density(sub) != pp.af) {
    throw InputError("vertex set does not induce a densest subgraph");
  }
  const EdgeSet inside = sub.edge_ids();
  for (EdgeId e : pp.non_prime) {
    if (std::binary_search(inside.begin(), inside.end(), e)) {
      throw InvariantError("non-prime edge " + std::to_string(e.value) + " inside a densest subgraph");
    }
  }

  std::vector<std::size_t> parts;
  std::size_t covered = 0;
  std::size_t budget = 1;
  for (const PrimeSet& p : pp.prime_sets) {
    const auto hits = static_cast<std::size_t>(std::count_if(p.edges.begin(), p.edges.end(), [&](EdgeId e) {
      return std::binary_search(inside.begin(), inside.end(), e);
    }));
    if (hits == 0) continue;
    if (hits != p.edges.size()) {
      throw InvariantError("prime set " + std::to_string(p.id) + " crosses the densest subgraph");
    }
    parts.push_back(p.id);
    covered += hits;
    budget += p.n_p - 1;
  }
  if (covered != inside.size()) throw InvariantError("prime sets do not cover the densest subgraph");
  if (budget != vertices.size()) {
    throw InvariantError("vertex count " + std::to_string(vertices.size()) + " differs from prime-set sum " +
                         std::to_string(budget));
  }
  return parts;
}

}  // namespace arbor
