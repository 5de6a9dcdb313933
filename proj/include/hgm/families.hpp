#pragma once

#include "hgm/canonical.hpp"
#include "hgm/hypergraph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hgm {

/**
 * A hypergraph together with names for the vertices that play a role in its
 * construction.
 *
 * Naming follows the construction: hyperpath junction vertices are
 * "u0".."uL" (or "u1".."u{p+1}", "v1".., "w1".. for the three paths of a
 * C-family base), cycle junctions are "x1".."xq" / "y1".."yq", and the j-th
 * degree-one vertex added to edge "e3" is "e3.c<j>". Identified vertices keep
 * every name they had.
 */
struct LabeledHypergraph {
  UniformHypergraph graph;
  std::map<std::string, Vertex> labels;

  Vertex at(const std::string& name) const;
};

/// Simple graph as an edge list on [0, n).
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

SimpleGraph path_graph(int q);
SimpleGraph star_graph(int q);
SimpleGraph cycle_graph(int q);

/// G^(k): every graph edge gains k-2 fresh degree-one vertices.
UniformHypergraph power_of_graph(const SimpleGraph& g, int k);

LabeledHypergraph power_path(int q, int k);
LabeledHypergraph power_star(int q, int k);
LabeledHypergraph power_cycle(int q, int k);

struct BParams {
  int p = 0;
  int l = 0;
  int q = 0;
};

struct CParams {
  int p = 0;
  int q = 0;
  int l = 0;
};

/// Domain checks; the string names the violated condition.
std::optional<std::string> b_domain_violation(int i, int k, BParams params);
std::optional<std::string> c_domain_violation(int i, int k, CParams params);
inline bool b_admissible(int i, int k, BParams params) { return !b_domain_violation(i, k, params); }
inline bool c_admissible(int i, int k, CParams params) { return !c_domain_violation(i, k, params); }

/// Two cycles of lengths p <= q joined by a path of length l (l = 0 glues them at one vertex).
/// i = 1: path ends on degree-2 cycle vertices; i = 2: on a degree-2 vertex of the
/// p-cycle and a degree-1 vertex of the q-cycle; i = 3: degree-1 vertices on both.
LabeledHypergraph build_B(int i, int k, BParams params);

/// Three hyperpaths P_p, P_q, P_l glued into a theta-like bicyclic base.
LabeledHypergraph build_C(int i, int k, CParams params);

/// Hypertree: P_{t-1} with a pendant edge hung from the degree-one vertex of its second edge.
LabeledHypergraph build_Q(int t, int k);
/// Unicyclic: C_{t-1} with a pendant edge at a degree-one cycle vertex (a cycle vertex when k = 2).
LabeledHypergraph build_W(int t, int k);

/// c new edges, each {v} plus k-1 fresh vertices.
UniformHypergraph attach_pendant_edges(const UniformHypergraph& h, Vertex v, int count);
/// A power path of `length` edges glued to h at v.
UniformHypergraph attach_pendant_path(const UniformHypergraph& h, Vertex v, int length);

/// A pendant path hanging at `anchor`: edges listed from the anchor outward.
struct PendantPath {
  Vertex anchor = 0;
  std::vector<EdgeIndex> edges;
};

/// Walks outward from `first_edge` (which must contain `anchor`) and returns
/// the hanging hyperpath, or nullopt when it is not a pendant path.
std::optional<PendantPath> find_pendant_path(const UniformHypergraph& h, Vertex anchor, EdgeIndex first_edge);

/// Checks the pendant-path conditions for an explicit descriptor.
bool is_pendant_path(const UniformHypergraph& h, const PendantPath& path);

/// Replaces the anchor edge e of the path by (e \ {anchor}) U {v}.
/// Throws std::invalid_argument when path is not pendant or v lies on it.
UniformHypergraph move_pendant_path(const UniformHypergraph& h, const PendantPath& path, Vertex v);

/// Repeatedly strips pendant edges; the result of a bicyclic hypergraph is its base.
UniformHypergraph peel_pendant_edges(const UniformHypergraph& h);

enum class FamilyKind { path, star, cycle, B, C, Q, W };

struct Attachment {
  std::variant<Vertex, std::string> site;
  int pendant_edges = 0;
  int path_len = 0;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int k = 3;
  int i = 0;
  int p = 0;
  int q = 0;
  int l = 0;
  int t = 0;
  std::vector<Attachment> attach;
};

std::string to_string(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_string(const std::string& name);

/// Builds the named family member and applies attachments in order. A string
/// site is either a construction label or "max_degree" (lowest-id vertex of
/// maximum degree in the hypergraph built so far).
UniformHypergraph build_family(const FamilySpec& spec);
/// Short human label, e.g. "C_3(p=1,q=2,l=1)+2pe@u1".
std::string describe(const FamilySpec& spec);

/// Which base a linear bicyclic hypergraph grows from.
struct BaseIdentity {
  FamilyKind kind = FamilyKind::B;  // B or C
  int i = 0;
  int p = 0;
  int q = 0;
  int l = 0;
};

/// Every admissible base with exactly `edges` edges, one FamilySpec per parameter choice.
std::vector<FamilySpec> bases_with_edges(int k, int edges);

/// Peels to the base and matches it against all base constructions; nullopt
/// when h is not a linear bicyclic hypergraph with a recognised base.
std::optional<BaseIdentity> identify_base(const UniformHypergraph& h);

struct EnumerationLimits {
  int max_edges = 10;
  int max_k = 5;
};

/// One representative per isomorphism class of linear bicyclic k-uniform
/// hypergraphs with m edges (and girth g when given), ordered by canonical form.
/// Built from every base with at most m edges by repeated pendant-edge growth.
std::vector<UniformHypergraph> enumerate_linear_bicyclic(int k, int m, std::optional<int> g = std::nullopt,
                                                         EnumerationLimits limits = {});

}  // namespace hgm
