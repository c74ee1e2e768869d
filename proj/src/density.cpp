#include "arbor/density.hpp"

#include <algorithm>
#include <string>

#include "arbor/errors.hpp"
#include "density_internal.hpp"
#include "disjoint_sets.hpp"
#include "flow.hpp"

namespace arbor {

namespace detail {

namespace {

// Capacities stay well inside 64 bits for any graph this library targets.
constexpr std::int64_t kScaleLimit = std::int64_t{1} << 40;

struct ScaledRational {
  std::int64_t p;  // numerator
  std::int64_t q;  // denominator
};

ScaledRational scale(const Rational& lambda) {
  const std::int64_t p = to_int64(lambda.get_num());
  const std::int64_t q = to_int64(lambda.get_den());
  if (p >= kScaleLimit || q >= kScaleLimit) {
    throw InvariantError("density threshold " + to_string(lambda) + " too large for integer flow capacities");
  }
  return {p, q};
}

}  // namespace

LocalGraph::LocalGraph(const Multigraph& graph) : g(&graph) {
  ends.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    ends.emplace_back(static_cast<int>(graph.index_of(e.u)), static_cast<int>(graph.index_of(e.v)));
  }
}

ExcessResult max_excess(const LocalGraph& lg, const Rational& lambda, std::span<const int> forced,
                        const std::vector<bool>& allowed) {
  const auto [p, q] = scale(lambda);
  const int n = lg.vertex_count();

  // Node layout: 0 source, 1 sink, then allowed edges, then allowed vertices.
  std::vector<int> vertex_node(static_cast<std::size_t>(n), -1);
  int next = 2;
  std::vector<int> edge_slots;
  for (std::size_t i = 0; i < lg.ends.size(); ++i) {
    const auto [a, b] = lg.ends[i];
    if (allowed[static_cast<std::size_t>(a)] && allowed[static_cast<std::size_t>(b)]) {
      edge_slots.push_back(static_cast<int>(i));
    }
  }
  next += static_cast<int>(edge_slots.size());
  for (int v = 0; v < n; ++v) {
    if (allowed[static_cast<std::size_t>(v)]) vertex_node[static_cast<std::size_t>(v)] = next++;
  }

  FlowNetwork net(next);
  for (std::size_t k = 0; k < edge_slots.size(); ++k) {
    const int node = 2 + static_cast<int>(k);
    const auto [a, b] = lg.ends[static_cast<std::size_t>(edge_slots[k])];
    net.add_arc(0, node, q);
    net.add_arc(node, vertex_node[static_cast<std::size_t>(a)], FlowNetwork::infinite);
    net.add_arc(node, vertex_node[static_cast<std::size_t>(b)], FlowNetwork::infinite);
  }
  for (int v = 0; v < n; ++v) {
    if (vertex_node[static_cast<std::size_t>(v)] >= 0) net.add_arc(vertex_node[static_cast<std::size_t>(v)], 1, p);
  }
  for (int v : forced) {
    if (vertex_node[static_cast<std::size_t>(v)] < 0) throw InvariantError("forced vertex outside allowed set");
    net.add_arc(0, vertex_node[static_cast<std::size_t>(v)], FlowNetwork::infinite);
  }

  const std::int64_t cut = net.max_flow(0, 1);
  const std::vector<bool> side = net.source_side(0);

  ExcessResult result;
  result.value = q * static_cast<std::int64_t>(edge_slots.size()) - cut;
  result.members.assign(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    const int node = vertex_node[static_cast<std::size_t>(v)];
    if (node >= 0 && side[static_cast<std::size_t>(node)]) result.members[static_cast<std::size_t>(v)] = true;
  }
  return result;
}

std::int64_t threshold_term(const Rational& lambda) { return scale(lambda).p; }

std::pair<Rational, std::vector<int>> densest_component(const LocalGraph& lg, const std::vector<bool>& members) {
  const int n = lg.vertex_count();
  DisjointSets sets(static_cast<std::size_t>(n));
  for (const auto& [a, b] : lg.ends) {
    if (members[static_cast<std::size_t>(a)] && members[static_cast<std::size_t>(b)]) {
      sets.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
  }
  std::vector<std::int64_t> vertices(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> edges(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (members[static_cast<std::size_t>(v)]) ++vertices[sets.find(static_cast<std::size_t>(v))];
  }
  for (const auto& [a, b] : lg.ends) {
    if (members[static_cast<std::size_t>(a)] && members[static_cast<std::size_t>(b)]) {
      ++edges[sets.find(static_cast<std::size_t>(a))];
    }
  }
  // Ascending scan reaches each component first at its minimum vertex, so
  // strict improvement keeps the smallest-labelled component on ties.
  int best_root = -1;
  Rational best(-1);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    if (!members[static_cast<std::size_t>(v)]) continue;
    const std::size_t root = sets.find(static_cast<std::size_t>(v));
    if (visited[root]) continue;
    visited[root] = true;
    const Rational d = vertices[root] > 1 ? make_rational(edges[root], vertices[root] - 1) : Rational(0);
    if (d > best) {
      best = d;
      best_root = static_cast<int>(root);
    }
  }
  std::vector<int> chosen;
  if (best_root < 0) return {Rational(0), chosen};
  for (int v = 0; v < n; ++v) {
    if (members[static_cast<std::size_t>(v)] && static_cast<int>(sets.find(static_cast<std::size_t>(v))) == best_root) {
      chosen.push_back(v);
    }
  }
  return {best, chosen};
}

std::optional<std::vector<int>> sweep_for_denser(const LocalGraph& lg, Rational& lambda, std::vector<bool> allowed,
                                                  bool improve) {
  const int n = lg.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : lg.ends) {
    if (allowed[static_cast<std::size_t>(a)] && allowed[static_cast<std::size_t>(b)]) {
      ++degree[static_cast<std::size_t>(a)];
      ++degree[static_cast<std::size_t>(b)];
    }
  }
  std::optional<std::vector<int>> found;
  for (int root = 0; root < n; ++root) {
    if (!allowed[static_cast<std::size_t>(root)]) continue;
    // Sets containing earlier roots were already examined, so each root only
    // needs the vertices not yet swept.
    while (degree[static_cast<std::size_t>(root)] > 0) {
      const int forced[] = {root};
      const ExcessResult best = max_excess(lg, lambda, forced, allowed);
      if (best.value <= -threshold_term(lambda)) break;
      auto [d, component] = densest_component(lg, best.members);
      if (d <= lambda) throw InvariantError("flow witness does not exceed the density threshold");
      lambda = d;
      found = std::move(component);
      if (!improve) return found;
    }
    allowed[static_cast<std::size_t>(root)] = false;
    for (const auto& [a, b] : lg.ends) {
      if ((a == root && allowed[static_cast<std::size_t>(b)]) || (b == root && allowed[static_cast<std::size_t>(a)])) {
        --degree[static_cast<std::size_t>(a == root ? b : a)];
      }
    }
  }
  return found;
}

VertexSet to_vertex_set(const LocalGraph& lg, std::span<const int> locals) {
  VertexSet out;
  out.reserve(locals.size());
  for (int v : locals) out.push_back(lg.g->vertices()[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_densest_subgraphs_at(const Multigraph& g, const Rational& af) {
  const LocalGraph lg(g);
  const int n = lg.vertex_count();
  const std::int64_t bound = -threshold_term(af);
  const std::size_t m = lg.ends.size();

  // D(e): the unique smallest densest subgraph containing edge e, as the
  // minimal maximizer of q*m(U) - p*|U| over U containing both endpoints.
  // Any maximizer already found that contains e bounds the search domain.
  std::vector<int> domain(m, -1);
  std::vector<int> smallest(m, -1);
  std::vector<std::vector<bool>> candidates;
  std::vector<std::size_t> candidate_size;
  const std::vector<bool> everything(static_cast<std::size_t>(n), true);

  for (std::size_t e = 0; e < m; ++e) {
    const auto [a, b] = lg.ends[e];
    const std::vector<bool>& allowed = domain[e] < 0 ? everything : candidates[static_cast<std::size_t>(domain[e])];
    const int forced[] = {a, b};
    ExcessResult best = max_excess(lg, af, forced, allowed);
    if (best.value < bound) continue;  // e lies in no densest subgraph
    if (best.value > bound) throw InvariantError("subgraph denser than the fractional arboricity");

    auto it = std::find(candidates.begin(), candidates.end(), best.members);
    int slot;
    if (it == candidates.end()) {
      slot = static_cast<int>(candidates.size());
      candidate_size.push_back(static_cast<std::size_t>(std::count(best.members.begin(), best.members.end(), true)));
      candidates.push_back(std::move(best.members));
    } else {
      slot = static_cast<int>(it - candidates.begin());
    }
    smallest[e] = slot;
    const std::vector<bool>& members = candidates[static_cast<std::size_t>(slot)];
    for (std::size_t f = e + 1; f < m; ++f) {
      const auto [c, d] = lg.ends[f];
      if (members[static_cast<std::size_t>(c)] && members[static_cast<std::size_t>(d)] &&
          (domain[f] < 0 || candidate_size[static_cast<std::size_t>(domain[f])] > candidate_size[static_cast<std::size_t>(slot)])) {
        domain[f] = slot;
      }
    }
  }

  // A candidate is minimal iff every edge inside it has it as D(e).
  std::vector<bool> minimal(candidates.size(), true);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [a, b] = lg.ends[e];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c][static_cast<std::size_t>(a)] && candidates[c][static_cast<std::size_t>(b)] &&
          smallest[e] != static_cast<int>(c)) {
        minimal[c] = false;
      }
    }
  }

  std::vector<std::pair<EdgeId, VertexSet>> found;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!minimal[c]) continue;
    std::vector<int> locals;
    for (int v = 0; v < n; ++v) {
      if (candidates[c][static_cast<std::size_t>(v)]) locals.push_back(v);
    }
    VertexSet vs = to_vertex_set(lg, locals);
    const EdgeSet inside = edges_within(g, vs);
    found.emplace_back(inside.front(), std::move(vs));
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<VertexSet> result;
  result.reserve(found.size());
  for (auto& [_, vs] : found) result.push_back(std::move(vs));
  return result;
}

}  // namespace detail

// ---------------------------------------------------------------------------

Rational density(const Multigraph& g) {
  const std::size_t rank = g.vertex_count() - component_count(g);
  if (rank == 0) return Rational(0);
  return make_rational(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(rank));
}

std::optional<VertexSet> exceeds_density(const Multigraph& g, const Rational& lambda) {
  if (lambda < 0) throw InputError("density threshold must be nonnegative, got " + to_string(lambda));
  if (g.edge_count() == 0) throw InputError("density test on an edgeless graph");
  const detail::LocalGraph lg(g);
  Rational level = lambda;
  auto found = detail::sweep_for_denser(lg, level, std::vector<bool>(g.vertex_count(), true), false);
  if (!found) return std::nullopt;
  return detail::to_vertex_set(lg, *found);
}

DensityCertificate fractional_arboricity(const Multigraph& g) {
  if (g.edge_count() == 0) throw InputError("fractional arboricity of an edgeless graph");
  const detail::LocalGraph lg(g);
  // Start from the densest component, then raise the level until no
  // connected subgraph beats it.
  auto [start, component] = detail::densest_component(lg, std::vector<bool>(g.vertex_count(), true));
  Rational level = start;
  auto better = detail::sweep_for_denser(lg, level, std::vector<bool>(g.vertex_count(), true), true);
  if (better) component = std::move(*better);
  return DensityCertificate{level, detail::to_vertex_set(lg, component)};
}

std::int64_t arboricity(const Multigraph& g) { return ceil_to_int64(fractional_arboricity(g).value); }

VertexSet minimal_densest_subgraph(const Multigraph& g) {
  if (!is_connected(g)) throw StructuralError("minimal densest subgraph requires a connected graph");
  if (g.edge_count() == 0) throw InputError("minimal densest subgraph of an edgeless graph");
  const Rational af = fractional_arboricity(g).value;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  // Densities have denominators below n, so "density >= af" is "density > af - slack".
  const Rational below = af - make_rational(1, n * (n - 1));

  const detail::LocalGraph lg(g);
  std::vector<bool> keep(g.vertex_count(), true);
  // One ascending pass suffices: a vertex whose removal once destroyed every
  // densest subgraph still does so after further deletions.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> trial = keep;
    trial[v] = false;
    Rational level = below;
    if (detail::sweep_for_denser(lg, level, trial, false)) keep = std::move(trial);
  }
  VertexSet result;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) result.push_back(g.vertices()[v]);
  }
  return result;
}

std::vector<VertexSet> enumerate_minimal_densest_subgraphs(const Multigraph& g) {
  if (!is_connected(g)) throw StructuralError("minimal densest subgraph enumeration requires a connected graph");
  if (g.edge_count() == 0) throw InputError("minimal densest subgraphs of an edgeless graph");
  return detail::minimal_densest_subgraphs_at(g, fractional_arboricity(g).value);
}

}  // namespace arbor
