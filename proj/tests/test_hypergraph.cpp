#include "hgm/families.hpp"
#include "hgm/hypergraph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hgm;

namespace {

UniformHypergraph single_edge(int k) {
  Edge e;
  for (int v = 0; v < k; ++v) e.push_back(static_cast<Vertex>(v));
  return UniformHypergraph(k, k, {e});
}

std::vector<std::size_t> sorted_degrees(const UniformHypergraph& h) {
  return degree_sequence(h).multiset();
}

}  // namespace

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
}

TEST_CASE("edges are stored sorted regardless of input order") {
  const UniformHypergraph a(3, 5, {{4, 3, 2}, {2, 1, 0}});
  const UniformHypergraph b(3, 5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(a == b);
  CHECK(a.edge(0) == Edge{0, 1, 2});
  CHECK(a.incident_edges(2).size() == 2);
  CHECK(a.contains(1, 4));
  CHECK_FALSE(a.contains(0, 4));
}

TEST_CASE("degree sequences") {
  const auto triangle = power_cycle(3, 3).graph;
  CHECK(sorted_degrees(triangle) == std::vector<std::size_t>{2, 2, 2, 1, 1, 1});
  CHECK(sorted_degrees(single_edge(3)) == std::vector<std::size_t>{1, 1, 1});

  const auto b = build_B(3, 3, {3, 0, 3}).graph;
  const auto profile = degree_sequence(b);
  CHECK(profile.total() == 18);
  CHECK(std::count(profile.degrees.begin(), profile.degrees.end(), 2) == 7);
  CHECK(std::count(profile.degrees.begin(), profile.degrees.end(), 1) == 4);
  CHECK(profile.max() == 2);
}

TEST_CASE("linearity and connectivity") {
  CHECK(is_linear(power_cycle(3, 3).graph));
  CHECK_FALSE(is_linear(UniformHypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})));
  CHECK(is_connected(single_edge(3)));
  CHECK_FALSE(is_connected(UniformHypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK_FALSE(is_connected(UniformHypergraph(3, 4, {{0, 1, 2}})));
}

TEST_CASE("bicyclic identity") {
  CHECK(is_bicyclic(build_B(3, 3, {3, 0, 3}).graph));
  CHECK_FALSE(is_bicyclic(power_path(2, 3).graph));
  const auto c = build_C(3, 3, {1, 2, 1}).graph;
  CHECK(c.num_vertices() == 7);
  CHECK(c.num_edges() == 4);
  CHECK(is_bicyclic(c));
}

TEST_CASE("girth") {
  for (int q = 3; q <= 6; ++q) CHECK(girth(power_cycle(q, 3).graph) == q);
  CHECK_FALSE(girth(power_path(4, 3).graph).has_value());
  CHECK_FALSE(girth(power_star(3, 4).graph).has_value());
  CHECK(girth(build_C(3, 3, {1, 2, 1}).graph) == 3);
  CHECK_THROWS_AS(girth(UniformHypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})), std::invalid_argument);
  // k = 2 girth is graph girth.
  CHECK(girth(UniformHypergraph(2, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == 4);
}

TEST_CASE("girth agrees with the incidence-graph oracle on every small class") {
  for (int m = 4; m <= 6; ++m) {
    for (const auto& h : enumerate_linear_bicyclic(3, m)) CHECK(girth(h) == oracle::incidence_girth(h));
  }
  for (const auto& h : enumerate_linear_bicyclic(4, 5)) CHECK(girth(h) == oracle::incidence_girth(h));
}

TEST_CASE("hypercycle recognition") {
  const auto c = power_cycle(4, 3).graph;
  const std::vector<EdgeIndex> all{0, 1, 2, 3};
  CHECK(is_hypercycle(c, all));
  const std::vector<EdgeIndex> three{0, 1, 2};
  CHECK_FALSE(is_hypercycle(c, three));
  const auto star = power_star(3, 3).graph;
  const std::vector<EdgeIndex> star_edges{0, 1, 2};
  CHECK_FALSE(is_hypercycle(star, star_edges));
}

TEST_CASE("cored vertices and pendant edges") {
  CHECK(cored_vertices(single_edge(3)).size() == 3);
  CHECK(pendant_edges(single_edge(3)).size() == 1);
  CHECK(cored_vertices(power_cycle(3, 3).graph).size() == 3);
  CHECK(pendant_edges(power_cycle(3, 3).graph).empty());
  CHECK(cored_vertices(power_star(3, 3).graph).size() == 6);
  CHECK(pendant_edges(power_star(3, 3).graph).size() == 3);
}

TEST_CASE("cored hypergraphs") {
  CHECK(is_cored_hypergraph(power_star(3, 3).graph));
  CHECK(is_cored_hypergraph(power_cycle(3, 3).graph));
  CHECK_FALSE(is_cored_hypergraph(build_C(3, 3, {1, 2, 1}).graph));
  CHECK(is_cored_hypergraph(build_C(2, 4, {1, 2, 1}).graph));
}

TEST_CASE("k-partite and hm-bipartite") {
  CHECK(is_k_partite(single_edge(3)));
  const auto triangle = power_cycle(3, 3).graph;
  const auto coloring = k_partite_coloring(triangle);
  REQUIRE(coloring);
  for (const auto& e : triangle.edges()) {
    std::set<int> colours;
    for (auto v : e) colours.insert((*coloring)[v]);
    CHECK(colours.size() == 3);
  }
  const auto c2 = build_C(2, 3, {1, 2, 1}).graph;
  CHECK_FALSE(is_k_partite(c2));
  const auto witness = hm_bipartite_witness(c2);
  REQUIRE(witness);
  for (const auto& e : c2.edges()) {
    int hits = 0;
    for (auto v : e) hits += std::count(witness->begin(), witness->end(), v);
    CHECK(hits == 1);
  }
  CHECK_FALSE(is_hm_bipartite(UniformHypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("k-partite implies hm-bipartite on every small class") {
  for (const auto& h : enumerate_linear_bicyclic(3, 5)) {
    if (is_k_partite(h)) CHECK(is_hm_bipartite(h));
  }
}

TEST_CASE("relabel and edge subhypergraphs") {
  const auto c = build_C(3, 3, {1, 2, 1}).graph;
  std::vector<Vertex> perm(c.num_vertices());
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<Vertex>(perm.size() - 1 - v);
  const auto r = relabel(c, perm);
  CHECK(r.num_edges() == c.num_edges());
  CHECK(sorted_degrees(r) == sorted_degrees(c));
  for (const auto& e : c.edges()) {
    Edge image;
    for (auto v : e) image.push_back(perm[v]);
    std::sort(image.begin(), image.end());
    CHECK(std::find(r.edges().begin(), r.edges().end(), image) != r.edges().end());
  }
  const std::vector<EdgeIndex> pick{0, 1};
  const auto sub = edge_subhypergraph(c, pick);
  CHECK(sub.num_edges() == 2);
  CHECK(sub.num_vertices() <= 6);
}

TEST_CASE("connected edge subsets match brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 3, 7, 6);
    for (std::size_t size = 1; size <= 4; ++size) {
      std::set<std::vector<EdgeIndex>> seen;
      for_each_connected_edge_subset(h, size, [&](std::span<const EdgeIndex> s) {
        CHECK(seen.insert(std::vector<EdgeIndex>(s.begin(), s.end())).second);
      });
      std::size_t expected = 0;
      std::vector<EdgeIndex> pick;
      std::function<void(EdgeIndex)> choose = [&](EdgeIndex from) {
        if (pick.size() == size) {
          expected += is_connected(edge_subhypergraph(h, pick));
          return;
        }
        for (EdgeIndex e = from; e < h.num_edges(); ++e) {
          pick.push_back(e);
          choose(e + 1);
          pick.pop_back();
        }
      };
      choose(0);
      CHECK(seen.size() == expected);
    }
  }
}

TEST_CASE("edge neighbours") {
  const auto p = power_path(3, 3).graph;
  std::size_t total = 0;
  for (EdgeIndex e = 0; e < p.num_edges(); ++e) total += edge_neighbors(p, e).size();
  CHECK(total == 4);
}
