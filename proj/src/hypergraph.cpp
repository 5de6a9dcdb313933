#include "hgm/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hgm {

UniformHypergraph::UniformHypergraph(int k, std::size_t n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  if (k_ < 2) throw std::invalid_argument("edge size k must be at least 2, got " + std::to_string(k_));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.size() != static_cast<std::size_t>(k_)) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": expected " + std::to_string(k_) +
                                  " vertices, got " + std::to_string(e.size()));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": repeated vertex");
    }
    if (e.back() >= n_) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": vertex " + std::to_string(e.back()) +
                                  " out of range [0, " + std::to_string(n_) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("edge " + std::to_string(dup - edges_.begin() + 1) + ": duplicate edge");
  }
  incidence_.assign(n_, {});
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
  }
}

bool UniformHypergraph::contains(EdgeIndex e, Vertex v) const {
  return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
}

std::size_t DegreeProfile::total() const { return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}); }

std::size_t DegreeProfile::max() const {
  return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

std::vector<std::size_t> DegreeProfile::multiset() const {
  auto out = degrees;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DegreeProfile degree_sequence(const UniformHypergraph& h) {
  DegreeProfile out;
  out.degrees.resize(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) out.degrees[v] = h.degree(v);
  return out;
}

namespace {

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_linear(const UniformHypergraph& h) {
  for (EdgeIndex a = 0; a < h.num_edges(); ++a) {
    for (EdgeIndex b : edge_neighbors(h, a)) {
      if (b > a && intersection_size(h.edge(a), h.edge(b)) > 1) return false;
    }
  }
  return true;
}

bool is_connected(const UniformHypergraph& h) {
  if (h.num_vertices() == 0) return true;
  DisjointSets sets(h.num_vertices());
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);
  }
  const auto root = sets.find(0);
  for (Vertex v = 1; v < h.num_vertices(); ++v) {
    if (sets.find(v) != root) return false;
  }
  return true;
}

bool is_bicyclic(const UniformHypergraph& h) {
  const auto m = static_cast<long>(h.num_edges());
  return is_connected(h) && static_cast<long>(h.num_vertices()) == m * (h.k() - 1) - 1;
}

std::vector<EdgeIndex> edge_neighbors(const UniformHypergraph& h, EdgeIndex e) {
  std::vector<EdgeIndex> out;
  for (Vertex v : h.edge(e)) {
    for (EdgeIndex f : h.incident_edges(v)) {
      if (f != e) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// ESU enumeration over the line graph. Returns false once visit asks to stop.
class ConnectedSubsetWalker {
 public:
  ConnectedSubsetWalker(const UniformHypergraph& h, std::size_t size,
                        const std::function<bool(std::span<const EdgeIndex>)>& visit)
      : size_(size), visit_(visit), neighbors_(h.num_edges()) {
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) neighbors_[e] = edge_neighbors(h, e);
  }

  void run() {
    if (size_ == 0) return;
    for (EdgeIndex start = 0; start < neighbors_.size() && !stopped_; ++start) {
      subset_ = {start};
      std::vector<EdgeIndex> extension;
      for (EdgeIndex f : neighbors_[start]) {
        if (f > start) extension.push_back(f);
      }
      extend(extension, start);
    }
  }

 private:
  bool in_subset(EdgeIndex e) const { return std::find(subset_.begin(), subset_.end(), e) != subset_.end(); }

  bool adjacent_to_subset(EdgeIndex e) const {
    for (EdgeIndex s : subset_) {
      if (std::binary_search(neighbors_[s].begin(), neighbors_[s].end(), e)) return true;
    }
    return false;
  }

  void extend(std::vector<EdgeIndex> extension, EdgeIndex start) {
    if (subset_.size() == size_) {
      sorted_ = subset_;
      std::sort(sorted_.begin(), sorted_.end());
      if (!visit_(sorted_)) stopped_ = true;
      return;
    }
    while (!extension.empty() && !stopped_) {
      const EdgeIndex w = extension.back();
      extension.pop_back();
      auto next = extension;
      for (EdgeIndex u : neighbors_[w]) {
        if (u > start && !in_subset(u) && !adjacent_to_subset(u) &&
            std::find(next.begin(), next.end(), u) == next.end()) {
          next.push_back(u);
        }
      }
      subset_.push_back(w);
      extend(std::move(next), start);
      subset_.pop_back();
    }
  }

  std::size_t size_;
  const std::function<bool(std::span<const EdgeIndex>)>& visit_;
  std::vector<std::vector<EdgeIndex>> neighbors_;
  std::vector<EdgeIndex> subset_;
  std::vector<EdgeIndex> sorted_;
  bool stopped_ = false;
};

}  // namespace

void for_each_connected_edge_subset(const UniformHypergraph& h, std::size_t size,
                                    const std::function<void(std::span<const EdgeIndex>)>& visit) {
  const std::function<bool(std::span<const EdgeIndex>)> wrapped = [&](std::span<const EdgeIndex> s) {
    visit(s);
    return true;
  };
  ConnectedSubsetWalker(h, size, wrapped).run();
}

bool is_hypercycle(const UniformHypergraph& h, std::span<const EdgeIndex> edge_subset) {
  const std::size_t t = edge_subset.size();
  if (t < 3) return false;
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& e = h.edge(edge_subset[i]);
    vertices.insert(vertices.end(), e.begin(), e.end());
    std::size_t meets = 0;
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      const auto common = intersection_size(e, h.edge(edge_subset[j]));
      if (common > 1) return false;
      meets += common;
    }
    if (meets != 2) return false;
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() != t * static_cast<std::size_t>(h.k() - 1)) return false;
  return is_connected(edge_subhypergraph(h, edge_subset));
}

std::optional<int> girth(const UniformHypergraph& h) {
  if (!is_linear(h)) throw std::invalid_argument("girth requires a linear hypergraph");
  for (std::size_t t = 3; t <= h.num_edges(); ++t) {
    bool found = false;
    const std::function<bool(std::span<const EdgeIndex>)> probe = [&](std::span<const EdgeIndex> s) {
      found = is_hypercycle(h, s);
      return !found;
    };
    ConnectedSubsetWalker(h, t, probe).run();
    if (found) return static_cast<int>(t);
  }
  return std::nullopt;
}

std::vector<Vertex> cored_vertices(const UniformHypergraph& h) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<EdgeIndex> pendant_edges(const UniformHypergraph& h) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    const auto cored = std::count_if(h.edge(e).begin(), h.edge(e).end(), [&](Vertex v) { return h.degree(v) == 1; });
    // An isolated edge (all k cored) also counts, so a single edge is pendant.
    if (cored >= h.k() - 1) out.push_back(e);
  }
  return out;
}

bool is_cored_hypergraph(const UniformHypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::any_of(e.begin(), e.end(), [&](Vertex v) { return h.degree(v) == 1; });
  });
}

namespace {

// Vertices of degree >= 2 must receive distinct colours whenever they share an
// edge; degree-one vertices then fill the remaining colours of their edge.
class PartiteColoring {
 public:
  explicit PartiteColoring(const UniformHypergraph& h) : h_(h), color_(h.num_vertices(), -1) {
    std::vector<bool> seen(h.num_vertices(), false);
    for (Vertex s = 0; s < h.num_vertices(); ++s) {
      if (seen[s] || h.degree(s) < 2) continue;
      std::vector<Vertex> queue{s};
      seen[s] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        order_.push_back(v);
        for (EdgeIndex e : h.incident_edges(v)) {
          for (Vertex u : h.edge(e)) {
            if (!seen[u] && h.degree(u) >= 2) {
              seen[u] = true;
              queue.push_back(u);
            }
          }
        }
      }
    }
  }

  std::optional<std::vector<int>> solve() {
    if (!assign(0, 0)) return std::nullopt;
    for (const auto& e : h_.edges()) {
      std::vector<bool> used(h_.k(), false);
      for (Vertex v : e) {
        if (color_[v] >= 0) used[color_[v]] = true;
      }
      int next = 0;
      for (Vertex v : e) {
        if (color_[v] >= 0) continue;
        while (used[next]) ++next;
        color_[v] = next;
        used[next] = true;
      }
    }
    for (auto& c : color_) {
      if (c < 0) c = 0;
    }
    return color_;
  }

 private:
  bool assign(std::size_t index, int colors_used) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    std::vector<bool> forbidden(h_.k(), false);
    for (EdgeIndex e : h_.incident_edges(v)) {
      for (Vertex u : h_.edge(e)) {
        if (u != v && color_[u] >= 0) forbidden[color_[u]] = true;
      }
    }
    const int limit = std::min(h_.k(), colors_used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden[c]) continue;
      color_[v] = c;
      if (assign(index + 1, std::max(colors_used, c + 1))) return true;
    }
    color_[v] = -1;
    return false;
  }

  const UniformHypergraph& h_;
  std::vector<int> color_;
  std::vector<Vertex> order_;
};

class HmBipartiteSearch {
 public:
  explicit HmBipartiteSearch(const UniformHypergraph& h)
      : h_(h), side_(h.num_vertices(), Side::unknown), hits_(h.num_edges(), 0) {}

  std::optional<std::vector<Vertex>> solve() {
    if (h_.num_edges() == 0) {
      if (h_.num_vertices() < 2) return std::nullopt;
      return std::vector<Vertex>{0};
    }
    if (!search()) return std::nullopt;
    std::vector<Vertex> v1;
    for (Vertex v = 0; v < h_.num_vertices(); ++v) {
      if (side_[v] == Side::first) v1.push_back(v);
    }
    return v1;
  }

 private:
  enum class Side { unknown, first, second };

  bool can_join_first(Vertex v) const {
    if (side_[v] != Side::unknown) return false;
    for (EdgeIndex e : h_.incident_edges(v)) {
      if (hits_[e] > 0) return false;
    }
    return true;
  }

  std::vector<Vertex> candidates(EdgeIndex e) const {
    std::vector<Vertex> out;
    bool cored_taken = false;
    for (Vertex v : h_.edge(e)) {
      if (!can_join_first(v)) continue;
      // Degree-one vertices of the same edge are interchangeable.
      if (h_.degree(v) == 1) {
        if (cored_taken) continue;
        cored_taken = true;
      }
      out.push_back(v);
    }
    return out;
  }

  bool search() {
    std::optional<EdgeIndex> target;
    std::vector<Vertex> best;
    for (EdgeIndex e = 0; e < h_.num_edges(); ++e) {
      if (hits_[e] > 0) continue;
      auto options = candidates(e);
      if (options.empty()) return false;
      if (!target || options.size() < best.size()) {
        target = e;
        best = std::move(options);
      }
    }
    if (!target) return true;
    for (Vertex v : best) {
      std::vector<Vertex> forced;
      side_[v] = Side::first;
      for (EdgeIndex e : h_.incident_edges(v)) {
        ++hits_[e];
        for (Vertex u : h_.edge(e)) {
          if (u != v && side_[u] == Side::unknown) {
            side_[u] = Side::second;
            forced.push_back(u);
          }
        }
      }
      if (search()) return true;
      for (Vertex u : forced) side_[u] = Side::unknown;
      for (EdgeIndex e : h_.incident_edges(v)) --hits_[e];
      side_[v] = Side::unknown;
    }
    return false;
  }

  const UniformHypergraph& h_;
  std::vector<Side> side_;
  std::vector<int> hits_;
};

}  // namespace

std::optional<std::vector<int>> k_partite_coloring(const UniformHypergraph& h) { return PartiteColoring(h).solve(); }

std::optional<std::vector<Vertex>> hm_bipartite_witness(const UniformHypergraph& h) {
  return HmBipartiteSearch(h).solve();
}

UniformHypergraph relabel(const UniformHypergraph& h, std::span<const Vertex> perm) {
  if (perm.size() != h.num_vertices()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    Edge image;
    for (Vertex v : e) image.push_back(perm[v]);
    edges.push_back(std::move(image));
  }
  return UniformHypergraph(h.k(), h.num_vertices(), std::move(edges));
}

UniformHypergraph edge_subhypergraph(const UniformHypergraph& h, std::span<const EdgeIndex> edge_subset) {
  std::vector<Vertex> vertices;
  for (EdgeIndex e : edge_subset) vertices.insert(vertices.end(), h.edge(e).begin(), h.edge(e).end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Edge> edges;
  for (EdgeIndex e : edge_subset) {
    Edge image;
    for (Vertex v : h.edge(e)) {
      image.push_back(static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()));
    }
    edges.push_back(std::move(image));
  }
  return UniformHypergraph(h.k(), vertices.size(), std::move(edges));
}

}  // namespace hgm
