#include "arbor/multigraph.hpp"

#include <algorithm>
#include <string>

#include "arbor/errors.hpp"
#include "disjoint_sets.hpp"

namespace arbor {

namespace {

template <typename Id>
void sort_unique(std::vector<Id>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::string describe(VertexId v) { return "vertex " + std::to_string(v.value); }
std::string describe(EdgeId e) { return "edge " + std::to_string(e.value); }

}  // namespace

void normalize(VertexSet& set) { sort_unique(set); }
void normalize(EdgeSet& set) { sort_unique(set); }

Multigraph::Multigraph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("duplicate vertex identity");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) throw InputError("duplicate " + describe(e.id));
    if (e.u == e.v) throw InputError(describe(e.id) + " is a loop");
    if (!contains(e.u) || !contains(e.v)) throw InputError(describe(e.id) + " has an unknown endpoint");
  }
}

Multigraph Multigraph::from_pairs(std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
  VertexSet vertices;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    vertices.push_back(VertexId{u});
    vertices.push_back(VertexId{v});
    edges.push_back(Edge{EdgeId{static_cast<std::uint32_t>(i)}, VertexId{u}, VertexId{v}});
  }
  sort_unique(vertices);
  return Multigraph(std::move(vertices), std::move(edges));
}

EdgeSet Multigraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

bool Multigraph::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Multigraph::contains(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge& a, EdgeId id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

std::size_t Multigraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw InputError("unknown " + describe(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Multigraph::index_of(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) throw InputError("unknown " + describe(e));
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<VertexSet> components(const Multigraph& g) {
  detail::DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(g.index_of(e.u), g.index_of(e.v));
  std::vector<VertexSet> result;
  std::vector<std::size_t> slot(g.vertex_count(), g.vertex_count());
  // vertices() is ascending, so classes appear in order of their minimum.
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == g.vertex_count()) {
      slot[root] = result.size();
      result.emplace_back();
    }
    result[slot[root]].push_back(g.vertices()[i]);
  }
  return result;
}

std::size_t component_count(const Multigraph& g) {
  detail::DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(g.index_of(e.u), g.index_of(e.v));
  return sets.set_count();
}

bool is_connected(const Multigraph& g) { return g.vertex_count() > 0 && component_count(g) == 1; }

Multigraph induced_by_edges(const Multigraph& g, EdgeSet edges) {
  sort_unique(edges);
  std::vector<Edge> kept;
  VertexSet vertices;
  kept.reserve(edges.size());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    kept.push_back(e);
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  sort_unique(vertices);
  return Multigraph(std::move(vertices), std::move(kept));
}

Multigraph induced_by_vertices(const Multigraph& g, VertexSet vertices) {
  sort_unique(vertices);
  for (VertexId v : vertices) g.index_of(v);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(vertices.begin(), vertices.end(), e.u) &&
        std::binary_search(vertices.begin(), vertices.end(), e.v)) {
      kept.push_back(e);
    }
  }
  return Multigraph(std::move(vertices), std::move(kept));
}

Multigraph delete_vertices(const Multigraph& g, VertexSet vertices) {
  sort_unique(vertices);
  VertexSet rest;
  for (VertexId v : g.vertices()) {
    if (!std::binary_search(vertices.begin(), vertices.end(), v)) rest.push_back(v);
  }
  return induced_by_vertices(g, std::move(rest));
}

Multigraph delete_edges(const Multigraph& g, EdgeSet edges) {
  sort_unique(edges);
  for (EdgeId e : edges) g.index_of(e);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(edges.begin(), edges.end(), e.id)) kept.push_back(e);
  }
  return Multigraph(VertexSet(g.vertices().begin(), g.vertices().end()), std::move(kept));
}

EdgeSet edges_within(const Multigraph& g, const VertexSet& vertices) {
  EdgeSet result;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(vertices.begin(), vertices.end(), e.u) &&
        std::binary_search(vertices.begin(), vertices.end(), e.v)) {
      result.push_back(e.id);
    }
  }
  return result;
}

VertexSet endpoints(const Multigraph& g, const EdgeSet& edges) {
  VertexSet result;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    result.push_back(e.u);
    result.push_back(e.v);
  }
  sort_unique(result);
  return result;
}

// ---------------------------------------------------------------------------

ContractionView::ContractionView(Multigraph base, std::vector<VertexId> image_of, EdgeSet contracted)
    : base_(std::move(base)), image_of_(std::move(image_of)), contracted_(std::move(contracted)) {
  if (image_of_.size() != base_.vertex_count()) throw InputError("vertex map size mismatch");
  for (const Edge& e : base_.edges()) {
    if (image_of_[base_.index_of(e.u)] != image_of_[base_.index_of(e.v)]) surviving_.push_back(e.id);
  }
  VertexSet images(image_of_.begin(), image_of_.end());
  sort_unique(images);
  image_count_ = images.size();
}

VertexId ContractionView::image(VertexId original) const { return image_of_[base_.index_of(original)]; }

Multigraph ContractionView::minor() const {
  VertexSet images(image_of_.begin(), image_of_.end());
  sort_unique(images);
  std::vector<Edge> edges;
  edges.reserve(surviving_.size());
  for (EdgeId id : surviving_) {
    const Edge& e = base_.edge(id);
    edges.push_back(Edge{id, image(e.u), image(e.v)});
  }
  return Multigraph(std::move(images), std::move(edges));
}

ContractionView contract(const Multigraph& g, EdgeSet edges) {
  sort_unique(edges);
  detail::DisjointSets sets(g.vertex_count());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    sets.unite(g.index_of(e.u), g.index_of(e.v));
  }
  // Image of a class is its minimum vertex; vertices() is ascending.
  std::vector<VertexId> representative(g.vertex_count(), VertexId{0});
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> image_of(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const std::size_t root = sets.find(i);
    if (!seen[root]) {
      seen[root] = true;
      representative[root] = g.vertices()[i];
    }
    image_of[i] = representative[root];
  }
  return ContractionView(g, std::move(image_of), std::move(edges));
}

ContractionView contract(const ContractionView& view, EdgeSet edges) {
  sort_unique(edges);
  for (EdgeId id : edges) {
    if (!std::binary_search(view.surviving().begin(), view.surviving().end(), id)) {
      throw InputError(describe(id) + " does not survive in the contracted graph");
    }
  }
  EdgeSet all = view.contracted();
  all.insert(all.end(), edges.begin(), edges.end());
  return contract(view.base(), std::move(all));
}

// ---------------------------------------------------------------------------

SpanningTree max_weight_spanning_tree(const Multigraph& g, const EdgeWeights& weights) {
  if (!is_connected(g)) throw StructuralError("spanning tree requested for a disconnected graph");
  std::vector<std::pair<const Rational*, const Edge*>> order;
  order.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    auto it = weights.find(e.id);
    if (it == weights.end()) throw InputError("no weight for " + describe(e.id));
    order.emplace_back(&it->second, &e);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return *a.first > *b.first; });

  detail::DisjointSets sets(g.vertex_count());
  SpanningTree tree;
  for (const auto& [w, e] : order) {
    if (sets.unite(g.index_of(e->u), g.index_of(e->v))) {
      tree.edges.push_back(e->id);
      tree.weight += *w;
    }
  }
  sort_unique(tree.edges);
  return tree;
}

mpz_class spanning_tree_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  // Laplacian minor with the last row/column removed; Bareiss elimination.
  const std::size_t k = n - 1;
  std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k, 0));
  for (const Edge& e : g.edges()) {
    const std::size_t i = g.index_of(e.u);
    const std::size_t j = g.index_of(e.v);
    if (i < k) a[i][i] += 1;
    if (j < k) a[j][j] += 1;
    if (i < k && j < k) {
      a[i][j] -= 1;
      a[j][i] -= 1;
    }
  }
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / previous;
      }
    }
    previous = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

namespace {

struct TreeEnumerator {
  const Multigraph& g;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<EdgeId> chosen;
  std::vector<EdgeSet>* out;

  bool still_spannable(const detail::DisjointSets& sets, std::size_t from) const {
    detail::DisjointSets probe = sets;
    for (std::size_t i = from; i < ends.size() && probe.set_count() > 1; ++i) probe.unite(ends[i].first, ends[i].second);
    return probe.set_count() == 1;
  }

  void run(std::size_t i, const detail::DisjointSets& sets) {
    if (sets.set_count() == 1) {
      out->emplace_back(chosen);
      return;
    }
    if (i == ends.size()) return;
    detail::DisjointSets with = sets;
    if (with.unite(ends[i].first, ends[i].second)) {
      chosen.push_back(g.edges()[i].id);
      run(i + 1, with);
      chosen.pop_back();
    }
    if (still_spannable(sets, i + 1)) run(i + 1, sets);
  }
};

}  // namespace

std::vector<EdgeSet> enumerate_spanning_trees(const Multigraph& g, std::size_t cap) {
  if (!is_connected(g)) throw StructuralError("spanning trees requested for a disconnected graph");
  const mpz_class count = spanning_tree_count(g);
  if (count > mpz_class(static_cast<unsigned long>(cap))) {
    throw ResourceError("graph has " + count.get_str() + " spanning trees, cap is " + std::to_string(cap));
  }
  std::vector<EdgeSet> trees;
  trees.reserve(count.get_ui());
  TreeEnumerator walker{g, {}, {}, &trees};
  for (const Edge& e : g.edges()) walker.ends.emplace_back(g.index_of(e.u), g.index_of(e.v));
  walker.run(0, detail::DisjointSets(g.vertex_count()));
  return trees;
}

bool is_spanning_tree(const Multigraph& g, const EdgeSet& edges) {
  if (g.vertex_count() == 0 || edges.size() != g.vertex_count() - 1) return false;
  detail::DisjointSets sets(g.vertex_count());
  for (EdgeId id : edges) {
    if (!g.contains(id)) return false;
    const Edge& e = g.edge(id);
    if (!sets.unite(g.index_of(e.u), g.index_of(e.v))) return false;
  }
  return sets.set_count() == 1;
}

}  // namespace arbor
