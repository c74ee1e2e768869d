#include <doctest.h>

#include "arbor/density.hpp"
#include "arbor/errors.hpp"
#include "arbor/game.hpp"
#include "arbor/oracle.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::q;

namespace {

Allocation uniform(const Multigraph& g, const Rational& value) {
  Allocation x;
  for (const Edge& e : g.edges()) x[e.id] = value;
  return x;
}

}  // namespace

TEST_CASE("characteristic function") {
  const Multigraph k4 = fixtures::k4();
  CHECK(gamma(k4, {}) == 0);
  CHECK(gamma(k4, {EdgeId{0}}) == 1);
  CHECK(gamma(k4, k4.edge_ids()) == 2);
  CHECK(gamma(fixtures::triangle(), fixtures::triangle().edge_ids()) == 2);
  CHECK(gamma(fixtures::graph({{0, 1}, {0, 1}, {0, 1}}), {EdgeId{0}, EdgeId{2}}) == 2);
}

TEST_CASE("core emptiness follows integrality of the fractional arboricity") {
  const CoreEmptiness tri = core_nonempty(fixtures::triangle());
  CHECK_FALSE(tri.nonempty);
  CHECK(tri.af == q(3, 2));
  CHECK(tri.a == 2);
  CHECK(core_nonempty(fixtures::k4()).nonempty);
  CHECK(core_nonempty(fixtures::path(3)).nonempty);
}

TEST_CASE("core membership verdicts") {
  const Multigraph k4 = fixtures::k4();
  const CoreCheckResult member = core_membership(k4, uniform(k4, q(1, 3)));
  CHECK(member.verdict == CoreVerdict::member);
  CHECK(member.max_tree_weight == 1);
  CHECK_FALSE(member.witness.has_value());

  Allocation heavy = uniform(k4, q(0));
  heavy[EdgeId{0}] = 2;
  const CoreCheckResult bad = core_membership(k4, heavy);
  CHECK(bad.verdict == CoreVerdict::violated);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->size() == 3);
  CHECK(bad.max_tree_weight == 2);
  CHECK(to_string(bad.verdict) == "violated");

  Allocation negative = uniform(k4, q(1, 2));
  negative[EdgeId{0}] = -1;
  CHECK(core_membership(k4, negative).verdict == CoreVerdict::negative_entry);
  CHECK(core_membership(k4, uniform(k4, q(1, 4))).verdict == CoreVerdict::not_allocation);

  Allocation short_one = uniform(k4, q(1, 3));
  short_one.erase(EdgeId{5});
  CHECK_THROWS_AS(core_membership(k4, short_one), InputError);
  short_one[EdgeId{9}] = 0;
  CHECK_THROWS_AS(core_membership(k4, short_one), InputError);

  const Multigraph tree = fixtures::path(4);
  CHECK(core_membership(tree, uniform(tree, q(1, 4))).verdict == CoreVerdict::member);
}

TEST_CASE("core vertices") {
  CHECK(core_vertices(fixtures::k4(), 10).size() == 1);
  CHECK(core_vertices(fixtures::two_k4_shared_vertex(), 10).size() == 3);
  const auto path = core_vertices(fixtures::path(2), 10);
  REQUIRE(path.size() == 3);
  for (const Allocation& x : path) CHECK(core_membership(fixtures::path(2), x).verdict == CoreVerdict::member);
  CHECK_THROWS_AS(core_vertices(fixtures::triangle(), 10), PreconditionError);
  CHECK_THROWS_AS(core_vertices(fixtures::path(2), 2), ResourceError);
}

TEST_CASE("spanning tree test agrees with checking every coalition") {
  std::mt19937_64 rng(17);
  int members = 0, outsiders = 0;
  for (int round = 0; round < 120; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 5);
    const auto m = static_cast<std::uint32_t>(n - 1 + rng() % (11 - n));
    const Multigraph g = fixtures::random_connected(rng, n, m);
    const CoreEmptiness status = core_nonempty(g);

    std::vector<Allocation> trials;
    if (status.nonempty) {
      const auto corners = core_vertices(g, 64);
      Allocation mix = uniform(g, q(0));
      for (const Allocation& c : corners)
        for (const auto& [e, v] : c) mix[e] += v / static_cast<long>(corners.size());
      trials.push_back(mix);
      Allocation nudged = mix;
      nudged[g.edges()[0].id] += q(1, 7);
      nudged[g.edges()[g.edge_count() - 1].id] -= q(1, 7);
      trials.push_back(nudged);
    }
    Allocation spread = uniform(g, Rational(status.a) / static_cast<long>(m));
    trials.push_back(spread);

    for (const Allocation& x : trials) {
      const bool brute = brute_core_check(g, x);
      CHECK((core_membership(g, x).verdict == CoreVerdict::member) == brute);
      (brute ? members : outsiders) += 1;
    }
  }
  CHECK(members > 20);
  CHECK(outsiders > 20);
}
