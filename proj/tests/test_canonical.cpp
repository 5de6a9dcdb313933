#include "hgm/canonical.hpp"
#include "hgm/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hgm;

namespace {

UniformHypergraph shuffled(const UniformHypergraph& h, std::mt19937_64& rng) {
  std::vector<Vertex> perm(h.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(h, perm);
}

}  // namespace

TEST_CASE("distinct shapes get distinct forms") {
  CHECK(canonical_form(power_cycle(3, 3).graph) != canonical_form(power_star(3, 3).graph));
  CHECK(canonical_form(build_C(3, 3, {1, 2, 1}).graph) != canonical_form(build_C(2, 3, {1, 2, 1}).graph));
}

TEST_CASE("canonical representative is a fixed point") {
  std::mt19937_64 rng(11);
  const auto h = build_B(2, 3, {3, 1, 4}).graph;
  const auto rep = canonical_representative(h);
  CHECK(canonical_representative(rep) == rep);
  CHECK(canonical_representative(shuffled(h, rng)) == rep);
  CHECK(canonical_form(rep) == canonical_form(h));
}

TEST_CASE("labeling maps onto the representative") {
  const auto h = build_C(3, 3, {2, 2, 2}).graph;
  const auto labeling = canonical_labeling(h);
  CHECK(relabel(h, labeling.labeling) == canonical_representative(h));
}

TEST_CASE("discovered automorphisms preserve the edge set") {
  for (const auto& h : {power_cycle(5, 3).graph, build_B(1, 3, {3, 0, 3}).graph, power_star(4, 3).graph}) {
    for (const auto& a : canonical_labeling(h).automorphisms) CHECK(relabel(h, a) == h);
  }
}

TEST_CASE("canonical equality agrees with backtracking isomorphism") {
  std::mt19937_64 rng(3);
  std::vector<UniformHypergraph> pool;
  for (int trial = 0; trial < 40; ++trial) pool.push_back(oracle::random_hypergraph(rng, 3, 6, 4));
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a; b < pool.size(); ++b) {
      CHECK(are_isomorphic(pool[a], pool[b]) == oracle::brute_isomorphic(pool[a], pool[b]));
    }
  }
}

TEST_CASE("regular structures with many automorphisms") {
  std::mt19937_64 rng(5);
  // Two 3-cycles sharing nothing vs a 6-cycle: same degree sequence, not isomorphic.
  const UniformHypergraph two_triangles(2, 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const UniformHypergraph hexagon(2, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(canonical_form(two_triangles) != canonical_form(hexagon));
  CHECK(canonical_form(shuffled(hexagon, rng)) == canonical_form(hexagon));
  // The Fano plane is 3-uniform and vertex-transitive.
  const UniformHypergraph fano(3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  for (int trial = 0; trial < 20; ++trial) CHECK(canonical_form(shuffled(fano, rng)) == canonical_form(fano));
}
