#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/// m / (n - c); zero for an edgeless graph (a single vertex has density zero).
Rational density(const Multigraph& g);

/// A connected vertex set whose induced subgraph has density strictly above
/// `lambda`, or nullopt if none exists. Requires at least one edge and
/// lambda >= 0 (InputError otherwise).
std::optional<VertexSet> exceeds_density(const Multigraph& g, const Rational& lambda);

struct DensityCertificate {
  Rational value;     // fractional arboricity
  VertexSet witness;  // connected, induced density == value
};

/// Maximum density over connected subgraphs. Requires at least one edge.
DensityCertificate fractional_arboricity(const Multigraph& g);

/// ceil(fractional arboricity): the minimum number of covering forests.
std::int64_t arboricity(const Multigraph& g);

/// A vertex-minimal densest subgraph, found by deleting vertices in ascending
/// order while a densest subgraph survives. Requires g connected with an edge.
VertexSet minimal_densest_subgraph(const Multigraph& g);

/// Every minimal densest subgraph, ordered by their smallest edge id. They are
/// pairwise edge-disjoint. Requires g connected with an edge.
std::vector<VertexSet> enumerate_minimal_densest_subgraphs(const Multigraph& g);

}  // namespace arbor
