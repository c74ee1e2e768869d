#include "arbor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "arbor/errors.hpp"
#include "arbor/simplex.hpp"
#include "disjoint_sets.hpp"

namespace arbor {

namespace {

void require_edges(const Multigraph& g) {
  if (g.edge_count() == 0) throw InputError("graph has no edges");
}

void require_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw ResourceError(std::to_string(size) + " " + what + " exceed the oracle cap of " + std::to_string(cap));
  }
  if (size > 30) throw ResourceError("oracle cannot enumerate more than 30 " + std::string(what));
}

// Endpoint count of a connected edge subset, or 0 when the subset is disconnected.
std::size_t connected_span(const Multigraph& g, std::uint32_t mask) {
  const auto edges = g.edges();
  std::vector<std::size_t> local;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const Edge& e = edges[static_cast<std::size_t>(std::countr_zero(rest))];
    local.push_back(g.index_of(e.u));
    local.push_back(g.index_of(e.v));
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  detail::DisjointSets sets(local.size());
  auto slot = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(local.begin(), local.end(), g.index_of(v)) - local.begin());
  };
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const Edge& e = edges[static_cast<std::size_t>(std::countr_zero(rest))];
    sets.unite(slot(e.u), slot(e.v));
  }
  return sets.set_count() == 1 ? local.size() : 0;
}

}  // namespace

BruteArboricity brute_fractional_arboricity(const Multigraph& g, std::size_t edge_cap) {
  require_edges(g);
  require_cap(g.edge_count(), edge_cap, "edges");
  const std::uint32_t full = (std::uint32_t{1} << g.edge_count()) - 1;
  BruteArboricity best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t n = connected_span(g, mask);
    if (n == 0) continue;
    const Rational d = make_rational(std::popcount(mask), static_cast<std::int64_t>(n) - 1);
    if (best_mask == 0 || d > best.value) {
      best.value = d;
      best_mask = mask;
    }
  }
  EdgeSet edges;
  for (std::uint32_t rest = best_mask; rest != 0; rest &= rest - 1) {
    edges.push_back(g.edges()[static_cast<std::size_t>(std::countr_zero(rest))].id);
  }
  best.witness = endpoints(g, edges);
  return best;
}

std::vector<VertexSet> enumerate_densest_subgraphs(const Multigraph& g, std::size_t vertex_cap) {
  require_edges(g);
  require_cap(g.vertex_count(), vertex_cap, "vertices");
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> adjacent(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const Edge& e : g.edges()) {
    const std::size_t a = g.index_of(e.u), b = g.index_of(e.v);
    adjacent[a] |= std::uint32_t{1} << b;
    adjacent[b] |= std::uint32_t{1} << a;
    ends.emplace_back(a, b);
  }
  auto connected = [&](std::uint32_t mask) {
    std::uint32_t reached = mask & (~mask + 1);
    for (std::uint32_t frontier = reached; frontier != 0;) {
      std::uint32_t next = 0;
      for (std::uint32_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= adjacent[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      next &= mask & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == mask;
  };

  Rational best = -1;
  std::vector<std::uint32_t> winners;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 2 || !connected(mask)) continue;
    std::int64_t m = 0;
    for (const auto& [a, b] : ends) {
      if ((mask >> a & 1U) && (mask >> b & 1U)) ++m;
    }
    const Rational d = make_rational(m, std::popcount(mask) - 1);
    if (d > best) {
      best = d;
      winners.clear();
    }
    if (d == best) winners.push_back(mask);
  }

  std::vector<VertexSet> result;
  for (std::uint32_t mask : winners) {
    VertexSet h;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      h.push_back(g.vertices()[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    result.push_back(std::move(h));
  }
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------

CoalitionTable::CoalitionTable(const Multigraph& g, std::size_t edge_cap) {
  require_cap(g.edge_count(), edge_cap, "edges");
  for (const Edge& e : g.edges()) players_.push_back(e.id);
  const std::size_t size = std::size_t{1} << players_.size();
  density_.assign(size, Rational(0));
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const std::size_t n = connected_span(g, mask);
    if (n != 0) density_[mask] = make_rational(std::popcount(mask), static_cast<std::int64_t>(n) - 1);
  }
  // Maximum over submasks, one player at a time.
  for (std::size_t bit = 0; bit < players_.size(); ++bit) {
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if ((mask >> bit & 1U) && density_[mask ^ (1U << bit)] > density_[mask]) {
        density_[mask] = density_[mask ^ (1U << bit)];
      }
    }
  }
  gamma_.resize(size);
  for (std::size_t mask = 0; mask < size; ++mask) gamma_[mask] = ceil_to_int64(density_[mask]);
}

std::vector<Rational> CoalitionTable::payoffs(const Allocation& x) const {
  if (x.size() != players_.size()) throw InputError("allocation size does not match the edge count");
  std::vector<Rational> out;
  out.reserve(players_.size());
  for (EdgeId e : players_) {
    auto it = x.find(e);
    if (it == x.end()) throw InputError("allocation has no value for edge " + std::to_string(e.value));
    out.push_back(it->second);
  }
  return out;
}

namespace {

Rational mask_sum(const std::vector<Rational>& values, std::uint32_t mask) {
  Rational sum = 0;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) sum += values[static_cast<std::size_t>(std::countr_zero(rest))];
  return sum;
}

}  // namespace

bool brute_core_check(const Multigraph& g, const Allocation& x, std::size_t edge_cap) {
  const CoalitionTable table(g, edge_cap);
  const std::vector<Rational> values = table.payoffs(x);
  if (std::any_of(values.begin(), values.end(), [](const Rational& v) { return sgn(v) < 0; })) return false;
  if (mask_sum(values, table.grand()) != table.gamma(table.grand())) return false;
  for (std::uint32_t mask = 1; mask < table.grand(); ++mask) {
    if (mask_sum(values, mask) > table.gamma(mask)) return false;
  }
  return true;
}

std::vector<Rational> excess_vector(const CoalitionTable& table, const Allocation& x) {
  const std::vector<Rational> values = table.payoffs(x);
  std::vector<Rational> out;
  for (std::uint32_t mask = 1; mask < table.grand(); ++mask) out.push_back(table.gamma(mask) - mask_sum(values, mask));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Row space of a set of vectors, kept in echelon form with unit pivots.
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const noexcept { return basis_.size(); }
  bool contains(std::vector<Rational> v) const { return is_zero(reduce(std::move(v))); }
  void add(std::vector<Rational> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return;
    const Rational lead = v[p];
    for (auto& c : v) c /= lead;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
  }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * basis_[k][j];
    }
    return v;
  }
  static bool is_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
  }

  std::size_t dim_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> indicator(std::uint32_t mask, std::size_t dim) {
  std::vector<Rational> v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i & 1U) ? 1 : 0;
  return v;
}

}  // namespace

Allocation maschler_nucleolus(const Multigraph& g, std::size_t edge_cap) {
  require_edges(g);
  if (!is_connected(g)) throw StructuralError("arboricity game requires a connected graph");
  const CoalitionTable table(g, edge_cap);
  const std::size_t m = table.players();
  const std::uint32_t grand = table.grand();
  const Rational af = table.max_density(grand);
  if (!is_integer(af)) {
    throw PreconditionError("core is empty: af=" + to_string(af) + ", a=" + std::to_string(table.gamma(grand)));
  }
  Allocation result;
  if (m == 1) {
    result[table.player(0)] = table.gamma(grand);
    return result;
  }

  std::vector<std::pair<std::uint32_t, Rational>> fixed{{grand, Rational(table.gamma(grand))}};
  std::vector<std::uint32_t> open;
  for (std::uint32_t mask = 1; mask < grand; ++mask) open.push_back(mask);
  RowSpan span(m);
  span.add(indicator(grand, m));

  for (bool first = true;; first = false) {
    // Maximize the uniform slack epsilon over the current polytope.
    LinearProgram lp;
    lp.variable_count = m + 1;
    lp.free_variables.assign(m + 1, false);
    lp.free_variables[m] = true;
    lp.objective.assign(m + 1, Rational(0));
    lp.objective[m] = 1;
    for (const auto& [mask, value] : fixed) {
      auto row = indicator(mask, m + 1);
      lp.add(std::move(row), Relation::equal, value);
    }
    for (std::uint32_t mask : open) {
      auto row = indicator(mask, m + 1);
      row[m] = 1;
      lp.add(std::move(row), Relation::less_equal, Rational(table.gamma(mask)));
    }
    const LpSolution top = simplex_solve(lp);
    if (top.status != LpStatus::optimal) throw InvariantError("nucleolus linear program is not bounded and feasible");
    const Rational eps = top.value;
    if (first && sgn(eps) < 0) throw InvariantError("core LP infeasible at an integral fractional arboricity");
    const std::vector<Rational> star(top.point.begin(), top.point.begin() + static_cast<std::ptrdiff_t>(m));

    // The optimal face, in x alone.
    LinearProgram face;
    face.variable_count = m;
    for (const auto& [mask, value] : fixed) face.add(indicator(mask, m), Relation::equal, value);
    for (std::uint32_t mask : open) face.add(indicator(mask, m), Relation::less_equal, table.gamma(mask) - eps);

    // Implicit equalities of the face. Repeatedly maximize the total slack of
    // the undecided rows: rows slack at the optimum are not equalities, and a
    // zero optimum proves every remaining row is one.
    struct Candidate {
      std::vector<Rational> row;  // as a vector in x; bounds use e_i
      std::uint32_t mask;         // coalition, or 0 for the bound x_i >= 0
      std::size_t index;          // bound variable when mask is 0
      Rational bound;
    };
    auto slack = [&](const Candidate& c, const std::vector<Rational>& p) {
      return c.mask != 0 ? c.bound - mask_sum(p, c.mask) : p[c.index];
    };
    std::vector<Candidate> undecided;
    auto consider = [&](Candidate c) {
      if (!span.contains(c.row) && sgn(slack(c, star)) == 0) undecided.push_back(std::move(c));
    };
    for (std::uint32_t mask : open) consider({indicator(mask, m), mask, 0, table.gamma(mask) - eps});
    for (std::size_t i = 0; i < m; ++i) consider({indicator(std::uint32_t{1} << i, m), 0, i, Rational(0)});

    SimplexEngine engine(face);
    while (!undecided.empty()) {
      std::vector<Rational> objective(m, Rational(0));
      for (const Candidate& c : undecided) {
        for (std::size_t i = 0; i < m; ++i) objective[i] += c.mask != 0 ? -c.row[i] : c.row[i];
      }
      const LpSolution far = engine.maximize(objective);
      if (far.status != LpStatus::optimal) throw InvariantError("face linear program failed");
      std::vector<Candidate> tight;
      for (Candidate& c : undecided) {
        if (sgn(slack(c, far.point)) == 0) tight.push_back(std::move(c));
      }
      if (tight.size() == undecided.size()) {
        for (Candidate& c : tight) span.add(std::move(c.row));
        break;
      }
      undecided = std::move(tight);
    }

    std::vector<std::uint32_t> still_open;
    for (std::uint32_t mask : open) {
      if (span.contains(indicator(mask, m))) {
        fixed.emplace_back(mask, mask_sum(star, mask));
      } else {
        still_open.push_back(mask);
      }
    }
    open = std::move(still_open);
    if (span.rank() == m) {
      for (std::size_t i = 0; i < m; ++i) result[table.player(i)] = star[i];
      return result;
    }
    if (open.empty()) throw InvariantError("nucleolus face did not shrink to a point");
  }
}

}  // namespace arbor
