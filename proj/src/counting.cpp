#include "hgm/counting.hpp"

#include "hgm/canonical.hpp"
#include "hgm/families.hpp"

#include <stdexcept>
#include <vector>

namespace hgm {

std::uint64_t zagreb_index(const UniformHypergraph& h) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) total += h.degree(v) * h.degree(v);
  return total;
}

namespace {

std::size_t union_size(const UniformHypergraph& h, std::span<const EdgeIndex> subset, std::vector<char>& seen) {
  std::size_t count = 0;
  for (EdgeIndex e : subset) {
    for (Vertex v : h.edge(e)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
      }
    }
  }
  for (EdgeIndex e : subset) {
    for (Vertex v : h.edge(e)) seen[v] = 0;
  }
  return count;
}

// Every subset of `size` edges, ascending.
void for_each_edge_subset(std::size_t m, std::size_t size, const std::function<void(std::span<const EdgeIndex>)>& visit) {
  std::vector<EdgeIndex> chosen;
  std::function<void(EdgeIndex)> extend = [&](EdgeIndex next) {
    if (chosen.size() == size) {
      visit(chosen);
      return;
    }
    for (EdgeIndex e = next; e + (size - chosen.size()) <= m; ++e) {
      chosen.push_back(e);
      extend(e + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

}  // namespace

std::uint64_t count_pattern(const UniformHypergraph& h, const UniformHypergraph& pattern) {
  if (h.k() != pattern.k()) {
    throw std::invalid_argument("pattern has k=" + std::to_string(pattern.k()) + " but host has k=" +
                                std::to_string(h.k()));
  }
  const std::size_t size = pattern.num_edges();
  if (size == 0 || size > h.num_edges()) return 0;
  // Only vertices covered by edges matter for an edge-subset match.
  std::size_t covered = 0;
  for (Vertex v = 0; v < pattern.num_vertices(); ++v) covered += pattern.degree(v) > 0 ? 1 : 0;
  if (covered != pattern.num_vertices()) return 0;

  const CanonicalForm target = canonical_form(pattern);
  std::vector<char> seen(h.num_vertices(), 0);
  std::uint64_t count = 0;
  auto check = [&](std::span<const EdgeIndex> subset) {
    if (union_size(h, subset, seen) != pattern.num_vertices()) return;
    if (canonical_form(edge_subhypergraph(h, subset)) == target) ++count;
  };
  if (is_connected(pattern)) {
    for_each_connected_edge_subset(h, size, check);
  } else {
    for_each_edge_subset(h.num_edges(), size, check);
  }
  return count;
}

std::uint64_t count_paths(const UniformHypergraph& h, int t) {
  if (t < 1) throw std::invalid_argument("path length must be at least 1");
  return count_pattern(h, power_path(t, h.k()).graph);
}

std::uint64_t count_cycles(const UniformHypergraph& h, int t) {
  if (t < 3) return 0;
  return count_pattern(h, power_cycle(t, h.k()).graph);
}

std::uint64_t count_star3(const UniformHypergraph& h) { return count_pattern(h, power_star(3, h.k()).graph); }

std::uint64_t count_Q(const UniformHypergraph& h, int t) { return count_pattern(h, build_Q(t, h.k()).graph); }

std::uint64_t count_W(const UniformHypergraph& h, int t) { return count_pattern(h, build_W(t, h.k()).graph); }

}  // namespace hgm
