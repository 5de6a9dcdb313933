#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hgm {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Edge = std::vector<Vertex>;

/**
 * Immutable k-uniform hypergraph on the vertex set [0, n).
 *
 * Each edge is stored ascending and the edge list is sorted lexicographically,
 * so two hypergraphs built from the same edge set compare equal regardless of
 * input order. Construction throws std::invalid_argument when an edge has the
 * wrong size, repeats a vertex, references a vertex >= n, or duplicates
 * another edge.
 */
class UniformHypergraph {
 public:
  UniformHypergraph(int k, std::size_t n, std::vector<Edge> edges);

  int k() const { return k_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  /// Indices of the edges containing v, ascending.
  std::span<const EdgeIndex> incident_edges(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }

  bool contains(EdgeIndex e, Vertex v) const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;

  std::size_t total() const;
  std::size_t max() const;
  /// Sorted descending; isomorphism invariant.
  std::vector<std::size_t> multiset() const;
};

DegreeProfile degree_sequence(const UniformHypergraph& h);

bool is_linear(const UniformHypergraph& h);
bool is_connected(const UniformHypergraph& h);
/// Connected and n = m(k-1) - 1.
bool is_bicyclic(const UniformHypergraph& h);

/// Length of a shortest hypercycle sub-hypergraph; nullopt when there is none.
/// Throws std::invalid_argument on non-linear input.
std::optional<int> girth(const UniformHypergraph& h);

/// True when the edges form a single loose cycle: every edge meets exactly two
/// others, each in one vertex, and the union has |S|(k-1) vertices.
bool is_hypercycle(const UniformHypergraph& h, std::span<const EdgeIndex> edge_subset);

std::vector<Vertex> cored_vertices(const UniformHypergraph& h);
/// Edges with at least k-1 cored vertices.
std::vector<EdgeIndex> pendant_edges(const UniformHypergraph& h);
bool is_cored_hypergraph(const UniformHypergraph& h);

/// Colour in [0, k) per vertex with every edge seeing each colour once.
std::optional<std::vector<int>> k_partite_coloring(const UniformHypergraph& h);
inline bool is_k_partite(const UniformHypergraph& h) { return k_partite_coloring(h).has_value(); }

/// A nonempty proper V1 meeting every edge in exactly one vertex.
std::optional<std::vector<Vertex>> hm_bipartite_witness(const UniformHypergraph& h);
inline bool is_hm_bipartite(const UniformHypergraph& h) { return hm_bipartite_witness(h).has_value(); }

/// Image of h under the vertex map v -> perm[v]; perm must be a permutation of [0, n).
UniformHypergraph relabel(const UniformHypergraph& h, std::span<const Vertex> perm);

/// Sub-hypergraph formed by the given edges, vertices renumbered densely in
/// ascending order of their original ids.
UniformHypergraph edge_subhypergraph(const UniformHypergraph& h, std::span<const EdgeIndex> edge_subset);

/// Calls visit once for every connected set of exactly `size` edges.
/// Subsets are passed as ascending edge indices.
void for_each_connected_edge_subset(const UniformHypergraph& h, std::size_t size,
                                    const std::function<void(std::span<const EdgeIndex>)>& visit);

/// Edges sharing at least one vertex with e (excluding e), ascending.
std::vector<EdgeIndex> edge_neighbors(const UniformHypergraph& h, EdgeIndex e);

}  // namespace hgm
