#pragma once

// Slow, direct implementations used to cross-check the library. None of them
// call the library's search, counting, canonical-form or moment code.

#include "hgm/exact.hpp"
#include "hgm/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using hgm::BigInt;
using hgm::Rational;
using hgm::UniformHypergraph;

/// S_d straight from the tuple sum: every root-sorted d-tuple of rooted edges,
/// Eulerian test on the union digraph, arborescences listed one by one.
Rational literal_moment(const UniformHypergraph& h, int d);

/// Spanning arborescences toward `root` by trying every out-arc choice.
/// arcs[i][j] is the multiplicity of arc i -> j.
BigInt brute_arborescences(const std::vector<std::vector<int>>& arcs, int root);

/// Backtracking vertex bijection search.
bool brute_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

/// Isomorphism classes of connected linear k-uniform hypergraphs with m edges
/// and n = m(k-1) - 1, grown edge by edge and deduplicated with brute_isomorphic.
std::vector<UniformHypergraph> brute_linear_bicyclic(int k, int m);

/// Shortest cycle of the vertex/edge incidence graph, halved.
std::optional<int> incidence_girth(const UniformHypergraph& h);

/// Edge subsets of h whose induced sub-hypergraph is isomorphic to pattern (all subsets tried).
std::uint64_t naive_count(const UniformHypergraph& h, const UniformHypergraph& pattern);

/// Pattern builders written out directly.
UniformHypergraph path(int t, int k);
UniformHypergraph cycle(int t, int k);
UniformHypergraph star(int t, int k);
/// Path of t-1 edges plus an edge hung from a degree-one vertex of the second edge.
UniformHypergraph q_gadget(int t, int k);
/// Cycle of t-1 edges plus an edge hung from a degree-one vertex of the cycle.
UniformHypergraph w_gadget(int t, int k);

/// trace(A^d) by repeated integer matrix multiplication.
BigInt graph_trace(int n, const std::vector<std::pair<int, int>>& edges, int d);

/// Random k-uniform hypergraph with m distinct edges on n vertices (n >= k).
UniformHypergraph random_hypergraph(std::mt19937_64& rng, int k, int n, int m);

/// Random simple graph as a 2-uniform hypergraph.
UniformHypergraph random_graph(std::mt19937_64& rng, int n, double density);

}  // namespace oracle
