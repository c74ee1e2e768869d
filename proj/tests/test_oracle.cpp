#include <doctest.h>

#include <algorithm>

#include "arbor/errors.hpp"
#include "arbor/oracle.hpp"
#include "arbor/simplex.hpp"
#include "fixtures.hpp"

using namespace arbor;
using fixtures::q;

namespace {

std::vector<Rational> rs(std::initializer_list<Rational> values) { return values; }

Allocation from(const Multigraph& g, std::initializer_list<Rational> values) {
  Allocation x;
  auto it = values.begin();
  for (const Edge& e : g.edges()) x[e.id] = *it++;
  return x;
}

}  // namespace

TEST_CASE("simplex on small programs") {
  LinearProgram one;
  one.variable_count = 1;
  one.free_variables = {true};
  one.objective = rs({1});
  one.add(rs({1}), Relation::less_equal, 1);
  const LpSolution a = simplex_solve(one);
  CHECK(a.status == LpStatus::optimal);
  CHECK(a.value == 1);

  LinearProgram box;
  box.variable_count = 2;
  box.objective = rs({1, 1});
  box.add(rs({1, 0}), Relation::less_equal, 1);
  box.add(rs({0, 1}), Relation::less_equal, 1);
  const LpSolution b = simplex_solve(box);
  CHECK(b.value == 2);
  CHECK(b.point == rs({1, 1}));

  // Least core of the two-edge path: max eps, 1 - x_i >= eps, x1 + x2 = 1.
  LinearProgram path;
  path.variable_count = 3;
  path.free_variables = {false, false, true};
  path.objective = rs({0, 0, 1});
  path.add(rs({1, 0, 1}), Relation::less_equal, 1);
  path.add(rs({0, 1, 1}), Relation::less_equal, 1);
  path.add(rs({1, 1, 0}), Relation::equal, 1);
  const LpSolution c = simplex_solve(path);
  CHECK(c.value == q(1, 2));
  CHECK(c.point == rs({q(1, 2), q(1, 2), q(1, 2)}));

  LinearProgram empty;
  empty.variable_count = 1;
  empty.objective = rs({1});
  empty.add(rs({1}), Relation::greater_equal, 2);
  empty.add(rs({1}), Relation::less_equal, 1);
  CHECK(simplex_solve(empty).status == LpStatus::infeasible);

  LinearProgram open;
  open.variable_count = 2;
  open.objective = rs({1, 0});
  open.add(rs({1, -1}), Relation::less_equal, 1);
  CHECK(simplex_solve(open).status == LpStatus::unbounded);

  LinearProgram negative;
  negative.variable_count = 2;
  negative.free_variables = {true, true};
  negative.objective = rs({-1, -1});
  negative.add(rs({1, 0}), Relation::greater_equal, -3);
  negative.add(rs({0, 1}), Relation::greater_equal, q(-5, 2));
  negative.add(rs({1, 1}), Relation::equal, -5);
  const LpSolution d = simplex_solve(negative);
  CHECK(d.value == 5);
  CHECK(d.point[0] + d.point[1] == -5);

  LinearProgram redundant;
  redundant.variable_count = 2;
  redundant.objective = rs({1, 2});
  redundant.add(rs({1, 1}), Relation::equal, 1);
  redundant.add(rs({2, 2}), Relation::equal, 2);
  const LpSolution e = simplex_solve(redundant);
  CHECK(e.value == 2);
  CHECK(e.point == rs({0, 1}));

  CHECK_THROWS_AS(one.add(rs({1, 2}), Relation::equal, 0), InputError);
}

TEST_CASE("simplex matches a brute-force vertex search on random programs") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 60; ++round) {
    LinearProgram lp;
    lp.variable_count = 2;
    lp.objective = rs({q(static_cast<long>(rng() % 7) - 3), q(static_cast<long>(rng() % 7) - 3)});
    lp.add(rs({1, 1}), Relation::less_equal, 6);
    std::vector<LinearConstraint> all = {
        {rs({1, 1}), Relation::less_equal, 6}, {rs({-1, 0}), Relation::less_equal, 0}, {rs({0, -1}), Relation::less_equal, 0}};
    for (int k = 0; k < 3; ++k) {
      const auto a = rs({q(static_cast<long>(rng() % 5) - 2), q(static_cast<long>(rng() % 5) - 2)});
      const Rational b = static_cast<long>(rng() % 6);
      lp.add(a, Relation::less_equal, b);
      all.push_back({a, Relation::less_equal, b});
    }
    // Enumerate all pairwise intersections of constraint lines.
    bool any = false;
    Rational best;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        const auto &r = all[i].coefficients, &s = all[j].coefficients;
        const Rational det = r[0] * s[1] - r[1] * s[0];
        if (sgn(det) == 0) continue;
        const Rational x = (all[i].rhs * s[1] - r[1] * all[j].rhs) / det;
        const Rational y = (r[0] * all[j].rhs - all[i].rhs * s[0]) / det;
        const bool feasible = std::all_of(all.begin(), all.end(), [&](const LinearConstraint& c) {
          return c.coefficients[0] * x + c.coefficients[1] * y <= c.rhs;
        });
        if (!feasible) continue;
        const Rational v = lp.objective[0] * x + lp.objective[1] * y;
        if (!any || v > best) best = v;
        any = true;
      }
    }
    const LpSolution sol = simplex_solve(lp);
    CAPTURE(round);
    REQUIRE(any);  // the origin is always feasible and the region is bounded
    CHECK(sol.status == LpStatus::optimal);
    CHECK(sol.value == best);
  }
}

TEST_CASE("exhaustive fractional arboricity") {
  CHECK(brute_fractional_arboricity(fixtures::triangle()).value == q(3, 2));
  CHECK(brute_fractional_arboricity(fixtures::k4()).value == 2);
  CHECK(brute_fractional_arboricity(fixtures::path(3)).value == 1);
  CHECK(brute_fractional_arboricity(fixtures::triangle_pendant()).witness.size() == 3);
  CHECK_THROWS_AS(brute_fractional_arboricity(fixtures::two_k4_shared_vertex(), 11), ResourceError);
}

TEST_CASE("densest subgraph enumeration") {
  CHECK(enumerate_densest_subgraphs(fixtures::two_k4_shared_vertex()).size() == 3);
  CHECK(enumerate_densest_subgraphs(fixtures::k4()).size() == 1);
  CHECK(enumerate_densest_subgraphs(fixtures::path(2)).size() == 3);
  CHECK_THROWS_AS(enumerate_densest_subgraphs(fixtures::path(20)), ResourceError);
}

TEST_CASE("coalition table") {
  const Multigraph g = fixtures::triangle();
  const CoalitionTable t(g, 14);
  CHECK(t.players() == 3);
  CHECK(t.gamma(0) == 0);
  CHECK(t.gamma(1) == 1);
  CHECK(t.gamma(3) == 1);
  CHECK(t.gamma(7) == 2);
  CHECK(t.max_density(7) == q(3, 2));
}

TEST_CASE("core check over all coalitions") {
  const Multigraph k4 = fixtures::k4();
  CHECK(brute_core_check(k4, from(k4, {q(1, 3), q(1, 3), q(1, 3), q(1, 3), q(1, 3), q(1, 3)})));
  const Multigraph tri = fixtures::triangle();
  CHECK_FALSE(brute_core_check(tri, from(tri, {q(2, 3), q(2, 3), q(2, 3)})));
  CHECK_FALSE(brute_core_check(tri, from(tri, {q(1), q(1), q(0)})));
  const Multigraph p2 = fixtures::path(2);
  CHECK(brute_core_check(p2, from(p2, {q(1), q(0)})));
  CHECK_FALSE(brute_core_check(p2, from(p2, {q(3, 2), q(-1, 2)})));
}

TEST_CASE("Maschler scheme on named graphs") {
  const Multigraph p2 = fixtures::path(2);
  CHECK(maschler_nucleolus(p2) == from(p2, {q(1, 2), q(1, 2)}));
  const Multigraph p3 = fixtures::path(3);
  CHECK(maschler_nucleolus(p3) == from(p3, {q(1, 3), q(1, 3), q(1, 3)}));
  const Multigraph k4 = fixtures::k4();
  CHECK(maschler_nucleolus(k4) == from(k4, {q(1, 3), q(1, 3), q(1, 3), q(1, 3), q(1, 3), q(1, 3)}));
  const Multigraph one = fixtures::path(1);
  CHECK(maschler_nucleolus(one) == from(one, {q(1)}));
  CHECK_THROWS_AS(maschler_nucleolus(fixtures::triangle()), PreconditionError);
  CHECK_THROWS_AS(maschler_nucleolus(fixtures::path(11)), ResourceError);
}

TEST_CASE("Maschler output is a core point that maximizes the excess vector") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int round = 0; round < 80 && checked < 25; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 4);
    const auto m = static_cast<std::uint32_t>(n - 1 + rng() % (9 - n));
    const Multigraph g = fixtures::random_connected(rng, n, m);
    if (!core_nonempty(g).nonempty) continue;
    ++checked;
    const Allocation x = maschler_nucleolus(g);
    CHECK(brute_core_check(g, x));
    const CoalitionTable table(g, 14);
    const auto theta = excess_vector(table, x);
    for (const Allocation& y : core_vertices(g, 64)) CHECK(theta >= excess_vector(table, y));

    // Relabeling the edges permutes the answer.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u.value, e.v.value);
    std::reverse(pairs.begin(), pairs.end());
    const Allocation flipped = maschler_nucleolus(fixtures::graph(pairs));
    for (std::size_t i = 0; i < m; ++i) CHECK(flipped.at(EdgeId{static_cast<std::uint32_t>(m - 1 - i)}) == x.at(EdgeId{static_cast<std::uint32_t>(i)}));
  }
  CHECK(checked >= 10);
}
