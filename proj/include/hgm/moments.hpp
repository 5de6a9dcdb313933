#pragma once

#include "hgm/exact.hpp"
#include "hgm/families.hpp"
#include "hgm/hypergraph.hpp"
#include "hgm/linalg.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgm {

/// One copy of an edge with a chosen root vertex inside it.
struct RootedEdge {
  EdgeIndex edge = 0;
  Vertex root = 0;

  friend auto operator<=>(const RootedEdge&, const RootedEdge&) = default;
};

/// Multi-digraph on a vertex subset: arcs(i, j) counts arcs vertices[i] -> vertices[j].
struct MultiDigraph {
  std::vector<Vertex> vertices;
  IntMatrix arcs;
};

/// Union of rooted stars: each copy e(v) contributes one arc v -> u for every u in e \ {v}.
MultiDigraph rooted_star_digraph(const UniformHypergraph& h, std::span<const RootedEdge> copies);

/// Connected and in-degree equal to out-degree at every vertex.
bool is_eulerian(const MultiDigraph& g);

/// Spanning arborescences oriented toward the first vertex, parallel arcs
/// distinguished. Throws std::invalid_argument when g is not Eulerian.
BigInt arborescence_count(const MultiDigraph& g);

/// Number of root-sorted tuples realizing the multiset: product over roots v of
/// r_v! / prod_e x_{e,v}!.
BigInt ordering_weight(std::span<const RootedEdge> copies);

/// A configuration with its derived quantities.
struct EulerianConfig {
  std::vector<RootedEdge> copies;  // sorted
  MultiDigraph digraph;
  std::vector<int> root_counts;    // aligned with digraph.vertices
  BigInt weight;
};

EulerianConfig make_config(const UniformHypergraph& h, std::vector<RootedEdge> copies);

struct MomentOptions {
  /// Budget in search nodes; see default_cost_limit().
  std::uint64_t cost_limit;

  MomentOptions();
  explicit MomentOptions(std::uint64_t limit) : cost_limit(limit) {}
};

/// HGM_COST_LIMIT from the environment when set, otherwise 5e8.
std::uint64_t default_cost_limit();

struct MomentResult {
  Rational value;
  std::uint64_t work = 0;
  std::uint64_t multiplicity_vectors = 0;
};

/// S_d by grouped enumeration of Eulerian configurations. d = 0 gives
/// n(k-1)^(n-1). Throws CostGuardExceeded past the budget and
/// std::invalid_argument for d < 0.
MomentResult spectral_moment_detailed(const UniformHypergraph& h, int d, const MomentOptions& options = {});

inline Rational spectral_moment_exact(const UniformHypergraph& h, int d, const MomentOptions& options = {}) {
  return spectral_moment_detailed(h, d, options).value;
}

/// Closed form when one is known for (h, d); nullopt otherwise.
std::optional<Rational> closed_form_moment(const UniformHypergraph& h, int d);

enum class MomentMethod { closed, enumerated };
std::string to_string(MomentMethod method);

struct MomentEntry {
  int d = 0;
  Rational value;
  MomentMethod method = MomentMethod::enumerated;
};

/// S_0..S_{d_max}, closed forms preferred.
std::vector<MomentEntry> moment_sequence(const UniformHypergraph& h, int d_max, const MomentOptions& options = {});

/// trace(A^d) for the adjacency matrix of g.
BigInt graph_trace_oracle(const SimpleGraph& g, int d);

}  // namespace hgm
