#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "arbor/multigraph.hpp"
#include "arbor/oracle.hpp"
#include "arbor/prime.hpp"
#include "arbor/rational.hpp"

namespace fixtures {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline arbor::Multigraph graph(const Pairs& pairs) { return arbor::Multigraph::from_pairs(pairs); }

inline Pairs complete_pairs(std::uint32_t n, std::uint32_t offset = 0) {
  Pairs out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) out.emplace_back(offset + i, offset + j);
  return out;
}

inline Pairs path_pairs(std::uint32_t edges) {
  Pairs out;
  for (std::uint32_t i = 0; i < edges; ++i) out.emplace_back(i, i + 1);
  return out;
}

inline arbor::Multigraph triangle() { return graph(complete_pairs(3)); }
inline arbor::Multigraph k4() { return graph(complete_pairs(4)); }
inline arbor::Multigraph path(std::uint32_t edges) { return graph(path_pairs(edges)); }

inline arbor::Multigraph star(std::uint32_t edges) {
  Pairs out;
  for (std::uint32_t i = 1; i <= edges; ++i) out.emplace_back(0, i);
  return graph(out);
}

// K4 on 0..3 and K4 on 3..6.
inline arbor::Multigraph two_k4_shared_vertex() {
  Pairs p = complete_pairs(4);
  for (auto e : complete_pairs(4, 3)) p.push_back(e);
  return graph(p);
}

// K4 on 0..3 (edges 0..5), K4 on 4..7 (edges 6..11), links 0-4 and 1-5 (edges 12, 13).
inline arbor::Multigraph two_k4_bridge() {
  Pairs p = complete_pairs(4);
  for (auto e : complete_pairs(4, 4)) p.push_back(e);
  p.emplace_back(0, 4);
  p.emplace_back(1, 5);
  return graph(p);
}

// K4s A=0..3, B=4..7, C=8..11, D=12..15 (edges 0..23). A-B and C-D are joined
// by two links each (edges 24..27), A-C and B-D by one link each (28, 29).
inline arbor::Multigraph four_k4_chain() {
  Pairs p;
  for (std::uint32_t k = 0; k < 4; ++k)
    for (auto e : complete_pairs(4, 4 * k)) p.push_back(e);
  p.emplace_back(0, 4);
  p.emplace_back(1, 5);
  p.emplace_back(8, 12);
  p.emplace_back(9, 13);
  p.emplace_back(2, 10);
  p.emplace_back(6, 14);
  return graph(p);
}

// Triangle 0,1,2 (edges 0..2) plus the pendant edge 2-3 (edge 3).
inline arbor::Multigraph triangle_pendant() {
  Pairs p = complete_pairs(3);
  p.emplace_back(2, 3);
  return graph(p);
}

/// Random connected multigraph: a random spanning tree plus extra random edges,
/// parallel edges allowed. Vertex labels are 0..n-1, edge order shuffled.
inline arbor::Multigraph random_connected(std::mt19937_64& rng, std::uint32_t n, std::uint32_t m) {
  Pairs p;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::uint32_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(0, i - 1);
    p.emplace_back(order[pick(rng)], order[i]);
  }
  std::uniform_int_distribution<std::uint32_t> vertex(0, n - 1);
  while (p.size() < m) {
    const std::uint32_t a = vertex(rng), b = vertex(rng);
    if (a != b) p.emplace_back(a, b);
  }
  std::shuffle(p.begin(), p.end(), rng);
  return graph(p);
}

/// Every connected multigraph on 2..max_n vertices with at most max_m edges and
/// edge multiplicity at most max_mult, one representative per isomorphism class.
inline std::vector<arbor::Multigraph> small_multigraphs(std::uint32_t max_n, std::uint32_t max_m,
                                                        std::uint32_t max_mult) {
  std::vector<arbor::Multigraph> out;
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    const Pairs slots = complete_pairs(n);
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      slot_of[slots[s].first][slots[s].second] = slot_of[slots[s].second][slots[s].first] = s;
    }
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> mult(slots.size(), 0);
    for (;;) {
      const std::uint32_t m = std::accumulate(mult.begin(), mult.end(), 0U);
      if (m >= n - 1 && m <= max_m) {
        // Connectivity by flooding from vertex 0.
        std::vector<bool> reached(n, false);
        std::vector<std::uint32_t> stack{0};
        reached[0] = true;
        while (!stack.empty()) {
          const std::uint32_t v = stack.back();
          stack.pop_back();
          for (std::uint32_t w = 0; w < n; ++w) {
            if (w != v && !reached[w] && mult[slot_of[v][w]] > 0) {
              reached[w] = true;
              stack.push_back(w);
            }
          }
        }
        if (std::all_of(reached.begin(), reached.end(), [](bool b) { return b; })) {
          std::vector<std::uint32_t> best;
          for (const auto& pm : perms) {
            std::vector<std::uint32_t> image(slots.size());
            for (std::size_t s = 0; s < slots.size(); ++s) image[slot_of[pm[slots[s].first]][pm[slots[s].second]]] = mult[s];
            if (best.empty() || image < best) best = std::move(image);
          }
          if (seen.insert(best).second) {
            Pairs p;
            for (std::size_t s = 0; s < slots.size(); ++s)
              for (std::uint32_t k = 0; k < mult[s]; ++k) p.push_back(slots[s]);
            out.push_back(graph(p));
          }
        }
      }
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == max_mult) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  return out;
}

/// Reference ancestor relation: Q is an ancestor of P iff every densest
/// subgraph containing P also contains Q.
inline std::vector<std::vector<std::size_t>> oracle_ancestors(const arbor::Multigraph& g,
                                                              const arbor::PrimePartition& pp) {
  std::vector<arbor::EdgeSet> densest;
  for (const arbor::VertexSet& h : arbor::enumerate_densest_subgraphs(g)) densest.push_back(arbor::edges_within(g, h));
  auto holds = [](const arbor::EdgeSet& outer, const arbor::EdgeSet& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
  };
  std::vector<std::vector<std::size_t>> out(pp.prime_sets.size());
  for (const arbor::PrimeSet& p : pp.prime_sets) {
    for (const arbor::PrimeSet& other : pp.prime_sets) {
      if (other.id == p.id) continue;
      const bool always = std::all_of(densest.begin(), densest.end(), [&](const arbor::EdgeSet& h) {
        return !holds(h, p.edges) || holds(h, other.edges);
      });
      if (always) out[p.id].push_back(other.id);
    }
  }
  return out;
}

inline arbor::Rational q(std::int64_t num, std::int64_t den = 1) { return arbor::make_rational(num, den); }

}  // namespace fixtures
