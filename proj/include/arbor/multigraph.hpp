#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

struct VertexId {
  std::uint32_t value = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
};

// Sorted, duplicate-free identity lists. Every function taking one of these
// normalizes its argument, so callers may pass unsorted input.
using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<EdgeId>;

void normalize(VertexSet& set);
void normalize(EdgeSet& set);

/// Loopless multigraph with stable vertex and edge identities.
///
/// Identities are opaque labels chosen by whoever builds the graph; subgraphs
/// and minors keep the identities of the graph they were derived from.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws InputError on loops, duplicate identities, or dangling endpoints.
  Multigraph(VertexSet vertices, std::vector<Edge> edges);

  /// Edge i joins pairs[i]; vertices are exactly the labels that occur.
  static Multigraph from_pairs(std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  EdgeSet edge_ids() const;

  bool contains(VertexId v) const;
  bool contains(EdgeId e) const;

  /// Position of the identity in vertices() / edges(). Throw InputError if absent.
  std::size_t index_of(VertexId v) const;
  std::size_t index_of(EdgeId e) const;

  const Edge& edge(EdgeId e) const { return edges_[index_of(e)]; }

 private:
  VertexSet vertices_;       // ascending
  std::vector<Edge> edges_;  // ascending by id
};

/// Partition of vertices into maximal connected sets, ordered by minimum vertex.
std::vector<VertexSet> components(const Multigraph& g);
std::size_t component_count(const Multigraph& g);
/// True iff the graph has at least one vertex and a single component.
bool is_connected(const Multigraph& g);

Multigraph induced_by_edges(const Multigraph& g, EdgeSet edges);
Multigraph induced_by_vertices(const Multigraph& g, VertexSet vertices);
Multigraph delete_vertices(const Multigraph& g, VertexSet vertices);
/// Removes the edges but keeps every vertex.
Multigraph delete_edges(const Multigraph& g, EdgeSet edges);
/// Edges of g with both endpoints in `vertices`.
EdgeSet edges_within(const Multigraph& g, const VertexSet& vertices);
/// Endpoints of the given edges.
VertexSet endpoints(const Multigraph& g, const EdgeSet& edges);

/// A minor of `base` obtained by contracting a set of edges.
///
/// Vertex classes are the components of (V, contracted edges); each class is
/// represented by its minimum original vertex. An edge survives iff its
/// endpoints fall into different classes. Surviving edges keep their ids.
class ContractionView {
 public:
  ContractionView() = default;
  ContractionView(Multigraph base, std::vector<VertexId> image_of, EdgeSet contracted);

  const Multigraph& base() const noexcept { return base_; }
  VertexId image(VertexId original) const;
  /// Image per vertex, parallel to base().vertices().
  std::span<const VertexId> vertex_map() const noexcept { return image_of_; }
  const EdgeSet& contracted() const noexcept { return contracted_; }
  const EdgeSet& surviving() const noexcept { return surviving_; }
  std::size_t image_count() const noexcept { return image_count_; }

  /// The contracted graph itself, with images as vertices.
  Multigraph minor() const;

 private:
  Multigraph base_;
  std::vector<VertexId> image_of_;
  EdgeSet contracted_;
  EdgeSet surviving_;
  std::size_t image_count_ = 0;
};

ContractionView contract(const Multigraph& g, EdgeSet edges);
/// Further contracts surviving edges of `view`; equals contracting the union in one step.
ContractionView contract(const ContractionView& view, EdgeSet edges);

using EdgeWeights = std::map<EdgeId, Rational>;

struct SpanningTree {
  EdgeSet edges;
  Rational weight;
};

/// Kruskal on descending weight, ties by ascending EdgeId.
/// Throws StructuralError when g is not connected.
SpanningTree max_weight_spanning_tree(const Multigraph& g, const EdgeWeights& weights);

/// Number of spanning trees (Kirchhoff), exact.
mpz_class spanning_tree_count(const Multigraph& g);

/// All spanning trees; throws ResourceError if there are more than `cap`.
std::vector<EdgeSet> enumerate_spanning_trees(const Multigraph& g, std::size_t cap);

bool is_spanning_tree(const Multigraph& g, const EdgeSet& edges);

}  // namespace arbor

template <>
struct std::hash<arbor::VertexId> {
  std::size_t operator()(arbor::VertexId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};

template <>
struct std::hash<arbor::EdgeId> {
  std::size_t operator()(arbor::EdgeId e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};
