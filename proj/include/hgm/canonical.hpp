#pragma once

#include "hgm/hypergraph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hgm {

/// Isomorphism-invariant certificate: equal for two hypergraphs iff they are isomorphic.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// Lowercase hex of the bytes, for reports.
  std::string hex() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// labeling[v] is the canonical id of vertex v.
  std::vector<Vertex> labeling;
  /// Vertex automorphisms found during the search (not necessarily a full generating set).
  std::vector<std::vector<Vertex>> automorphisms;
};

/// Canonical labeling of the vertex/edge incidence graph by partition
/// refinement with individualization; branches are pruned with automorphisms
/// discovered along the way.
CanonicalLabeling canonical_labeling(const UniformHypergraph& h);

inline CanonicalForm canonical_form(const UniformHypergraph& h) { return canonical_labeling(h).form; }

/// The hypergraph relabeled into canonical position.
UniformHypergraph canonical_representative(const UniformHypergraph& h);

inline bool are_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  return a.k() == b.k() && a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace hgm
