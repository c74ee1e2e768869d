#include <doctest.h>

#include <algorithm>

#include "arbor/density.hpp"
#include "arbor/errors.hpp"
#include "arbor/oracle.hpp"
#include "arbor/prime.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::q;

namespace {

EdgeSet edge_range(std::uint32_t lo, std::uint32_t hi) {
  EdgeSet out;
  for (std::uint32_t i = lo; i < hi; ++i) out.push_back(EdgeId{i});
  return out;
}

using Ids = std::vector<std::size_t>;

}  // namespace

TEST_CASE("two K4s joined by two links") {
  const Multigraph g = fixtures::two_k4_bridge();
  const PrimePartition pp = prime_partition(g);
  CHECK(pp.af == 2);
  REQUIRE(pp.prime_sets.size() == 3);
  CHECK(pp.prime_sets[0].edges == edge_range(0, 6));
  CHECK(pp.prime_sets[1].edges == edge_range(6, 12));
  CHECK(pp.prime_sets[2].edges == edge_range(12, 14));
  CHECK(pp.prime_sets[0].level == 0);
  CHECK(pp.prime_sets[2].level == 1);
  CHECK(pp.prime_sets[0].n_p == 4);
  CHECK(pp.prime_sets[2].n_p == 2);
  CHECK(pp.non_prime.empty());
  CHECK(pp.owner_of(EdgeId{13}) == 2);

  const AncestorPoset poset = ancestors(g, pp);
  CHECK(poset.parents[2] == Ids{0, 1});
  CHECK(poset.parents[0].empty());
  CHECK(poset.precedes(2, 0));
  CHECK_FALSE(poset.precedes(0, 2));
  CHECK(poset.children()[0] == Ids{2});
}

TEST_CASE("triangle with a pendant edge") {
  const Multigraph g = fixtures::triangle_pendant();
  const PrimePartition pp = prime_partition(g);
  REQUIRE(pp.prime_sets.size() == 1);
  CHECK(pp.prime_sets[0].edges == edge_range(0, 3));
  CHECK(pp.non_prime == EdgeSet{EdgeId{3}});
  CHECK(pp.owner_of(EdgeId{3}) == 1);
}

TEST_CASE("trees split into single edges") {
  const Multigraph g = fixtures::star(5);
  const PrimePartition pp = prime_partition(g);
  REQUIRE(pp.prime_sets.size() == 5);
  for (const PrimeSet& p : pp.prime_sets) {
    CHECK(p.edges.size() == 1);
    CHECK(p.level == 0);
  }
  const AncestorPoset poset = ancestors(g, pp);
  for (const auto& parents : poset.parents) CHECK(parents.empty());
}

TEST_CASE("four K4 chain has three levels") {
  const Multigraph g = fixtures::four_k4_chain();
  const PrimePartition pp = prime_partition(g);
  REQUIRE(pp.prime_sets.size() == 7);
  for (std::size_t i = 0; i < 4; ++i) CHECK(pp.prime_sets[i].level == 0);
  CHECK(pp.prime_sets[4].edges == edge_range(24, 26));
  CHECK(pp.prime_sets[5].edges == edge_range(26, 28));
  CHECK(pp.prime_sets[6].edges == edge_range(28, 30));
  CHECK(pp.prime_sets[6].level == 2);

  const AncestorPoset poset = ancestors(g, pp);
  CHECK(poset.parents[4] == Ids{0, 1});
  CHECK(poset.parents[5] == Ids{2, 3});
  CHECK(poset.parents[6] == Ids{4, 5});
  CHECK(poset.ancestors[6] == Ids{0, 1, 2, 3, 4, 5});
  CHECK(poset.ancestors == fixtures::oracle_ancestors(g, pp));
}

TEST_CASE("an ancestor hidden behind one of its own descendants") {
  // Vertex 8 reaches the dense core through the double edge 7-8 (level 0) and
  // through the path 8-1-7 (level 1, which needs 7-8). The level-3 set on
  // vertex 5 still needs the double edge even though the path alone would
  // join 8 once contracted.
  const Multigraph g = fixtures::graph({{8, 5}, {4, 7}, {5, 0}, {7, 8}, {1, 8}, {6, 0}, {4, 6}, {7, 1},
                                        {0, 3}, {7, 8}, {7, 4}, {6, 7}, {2, 7}, {6, 2}, {2, 5}});
  const PrimePartition pp = prime_partition(g);
  const AncestorPoset poset = ancestors(g, pp);
  const std::size_t five = pp.owner_of(EdgeId{14});
  const std::size_t double_edge = pp.owner_of(EdgeId{3});
  CHECK(poset.precedes(five, double_edge));
  CHECK_FALSE(poset.precedes(five, pp.owner_of(EdgeId{4})));
  CHECK(poset.ancestors == fixtures::oracle_ancestors(g, pp));
}

TEST_CASE("two K4s sharing a vertex are independent") {
  const Multigraph g = fixtures::two_k4_shared_vertex();
  const PrimePartition pp = prime_partition(g);
  REQUIRE(pp.prime_sets.size() == 2);
  const AncestorPoset poset = ancestors(g, pp);
  CHECK(poset.parents[0].empty());
  CHECK(poset.parents[1].empty());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(prime_partition(Multigraph({VertexId{0}}, {})), InputError);
  const Multigraph split({VertexId{0}, VertexId{1}, VertexId{2}, VertexId{3}},
                         {{EdgeId{0}, VertexId{0}, VertexId{1}}, {EdgeId{1}, VertexId{2}, VertexId{3}}});
  CHECK_THROWS_AS(prime_partition(split), StructuralError);

  const Multigraph g = fixtures::two_k4_bridge();
  PrimePartition broken = prime_partition(g);
  broken.prime_sets.pop_back();
  CHECK_THROWS_AS(ancestors(g, broken), InputError);

  CHECK_THROWS_AS(poset_from_parents({{1}, {0}}), InvariantError);
  const AncestorPoset chain = poset_from_parents({{}, {0}, {1}});
  CHECK(chain.ancestors[2] == Ids{0, 1});

  const PrimePartition pp = prime_partition(g);
  CHECK_THROWS_AS(decompose_densest_subgraph(pp, {VertexId{0}, VertexId{4}}, g), InputError);
  VertexSet all(g.vertices().begin(), g.vertices().end());
  CHECK(decompose_densest_subgraph(pp, all, g) == Ids{0, 1, 2});
}

TEST_CASE("structure on random graphs") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 120; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 8);
    const auto m = static_cast<std::uint32_t>(n - 1 + rng() % (2 * n));
    const Multigraph g = fixtures::random_connected(rng, n, m);
    CAPTURE(round);
    const PrimePartition pp = prime_partition(g);
    std::size_t covered = pp.non_prime.size(), budget = 0;
    for (const PrimeSet& p : pp.prime_sets) {
      covered += p.edges.size();
      budget += p.n_p - 1;
      // Every prime set is as dense as the whole graph in its own minor.
      CHECK(Rational(static_cast<long>(p.edges.size())) == pp.af * static_cast<long>(p.n_p - 1));
    }
    CHECK(covered == g.edge_count());
    CHECK(budget <= g.vertex_count() - 1);

    for (const VertexSet& h : enumerate_densest_subgraphs(g)) CHECK_NOTHROW(decompose_densest_subgraph(pp, h, g));
    const AncestorPoset poset = ancestors(g, pp);
    CHECK(poset.ancestors == fixtures::oracle_ancestors(g, pp));
  }
}
