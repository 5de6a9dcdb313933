#include "hgm/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace hgm {

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

using Coloring = std::vector<int>;
using NodePerm = std::vector<std::size_t>;

void append_u32(std::string& out, std::uint32_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((value >> shift) & 0xff));
}

// Nodes [0, n) are vertices, [n, n + m) are edges.
class IncidenceSearch {
 public:
  explicit IncidenceSearch(const UniformHypergraph& h)
      : h_(h), n_(h.num_vertices()), size_(h.num_vertices() + h.num_edges()), adjacency_(size_) {
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
      for (Vertex v : h.edge(e)) {
        adjacency_[v].push_back(n_ + e);
        adjacency_[n_ + e].push_back(v);
      }
    }
  }

  CanonicalLabeling run() {
    Coloring start(size_);
    for (std::size_t x = 0; x < size_; ++x) start[x] = x < n_ ? 0 : (n_ > 0 ? 1 : 0);
    std::vector<std::size_t> prefix;
    explore(std::move(start), prefix);

    CanonicalLabeling out;
    out.form.bytes = best_certificate_;
    out.labeling.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) out.labeling[v] = static_cast<Vertex>(best_labels_[v]);
    for (const auto& g : automorphisms_) {
      std::vector<Vertex> vertex_part(n_);
      for (std::size_t v = 0; v < n_; ++v) vertex_part[v] = static_cast<Vertex>(g[v]);
      out.automorphisms.push_back(std::move(vertex_part));
    }
    return out;
  }

 private:
  void refine(Coloring& color) const {
    std::size_t cells = count_cells(color);
    std::vector<std::pair<int, std::vector<int>>> keys(size_);
    std::vector<std::size_t> order(size_);
    while (true) {
      for (std::size_t x = 0; x < size_; ++x) {
        keys[x].first = color[x];
        keys[x].second.clear();
        for (std::size_t y : adjacency_[x]) keys[x].second.push_back(color[y]);
        std::sort(keys[x].second.begin(), keys[x].second.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
      int next = -1;
      for (std::size_t i = 0; i < size_; ++i) {
        if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++next;
        color[order[i]] = next;
      }
      const std::size_t refined = static_cast<std::size_t>(next + 1);
      if (refined == cells) return;
      cells = refined;
    }
  }

  static std::size_t count_cells(const Coloring& color) {
    if (color.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(color.begin(), color.end()) + 1);
  }

  static Coloring individualize(const Coloring& color, std::size_t node) {
    Coloring out = color;
    const int c = color[node];
    for (std::size_t x = 0; x < out.size(); ++x) {
      if (out[x] > c || (out[x] == c && x != node)) ++out[x];
    }
    return out;
  }

  std::string certificate(const Coloring& labels) const {
    std::vector<Edge> relabeled;
    relabeled.reserve(h_.num_edges());
    for (const auto& e : h_.edges()) {
      Edge image;
      for (Vertex v : e) image.push_back(static_cast<Vertex>(labels[v]));
      std::sort(image.begin(), image.end());
      relabeled.push_back(std::move(image));
    }
    std::sort(relabeled.begin(), relabeled.end());
    std::string out;
    append_u32(out, static_cast<std::uint32_t>(h_.k()));
    append_u32(out, static_cast<std::uint32_t>(n_));
    append_u32(out, static_cast<std::uint32_t>(h_.num_edges()));
    for (const auto& e : relabeled) {
      for (Vertex v : e) append_u32(out, v);
    }
    return out;
  }

  // Automorphism mapping leaf `to` onto leaf `from`: x -> from^{-1}(to(x)).
  NodePerm automorphism(const Coloring& from, const Coloring& to) const {
    std::vector<std::size_t> inverse(size_);
    for (std::size_t x = 0; x < size_; ++x) inverse[from[x]] = x;
    NodePerm g(size_);
    for (std::size_t v = 0; v < n_; ++v) g[v] = inverse[to[v]];
    for (EdgeIndex e = 0; e < h_.num_edges(); ++e) {
      Edge image;
      for (Vertex v : h_.edge(e)) image.push_back(static_cast<Vertex>(g[v]));
      std::sort(image.begin(), image.end());
      const auto it = std::lower_bound(h_.edges().begin(), h_.edges().end(), image);
      g[n_ + e] = n_ + static_cast<std::size_t>(it - h_.edges().begin());
    }
    return g;
  }

  void record_leaf(const Coloring& labels) {
    std::string cert = certificate(labels);
    if (!first_labels_) {
      first_labels_ = labels;
      first_certificate_ = cert;
      best_labels_ = labels;
      best_certificate_ = std::move(cert);
      return;
    }
    if (cert == first_certificate_) {
      automorphisms_.push_back(automorphism(*first_labels_, labels));
    } else if (cert == best_certificate_) {
      automorphisms_.push_back(automorphism(best_labels_, labels));
    } else if (cert < best_certificate_) {
      best_labels_ = labels;
      best_certificate_ = std::move(cert);
    }
  }

  std::size_t orbit_root(std::vector<std::size_t>& parent, std::size_t x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<std::size_t> orbits_fixing(const std::vector<std::size_t>& prefix) const {
    std::vector<std::size_t> parent(size_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](std::size_t p) { return g[p] == p; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < size_; ++x) {
        const auto a = orbit_root(parent, x);
        const auto b = orbit_root(parent, g[x]);
        if (a != b) parent[a] = b;
      }
    }
    for (std::size_t x = 0; x < size_; ++x) parent[x] = orbit_root(parent, x);
    return parent;
  }

  void explore(Coloring color, std::vector<std::size_t>& prefix) {
    refine(color);
    const std::size_t cells = count_cells(color);
    if (cells == size_) {
      record_leaf(color);
      return;
    }
    std::vector<std::size_t> cell_size(cells, 0);
    for (int c : color) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;

    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < size_; ++x) {
      if (color[x] == target) members.push_back(x);
    }
    std::vector<std::size_t> explored;
    for (std::size_t w : members) {
      if (!explored.empty()) {
        auto orbit = orbits_fixing(prefix);
        const bool equivalent =
            std::any_of(explored.begin(), explored.end(), [&](std::size_t e) { return orbit[e] == orbit[w]; });
        if (equivalent) continue;
      }
      prefix.push_back(w);
      explore(individualize(color, w), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  const UniformHypergraph& h_;
  std::size_t n_;
  std::size_t size_;
  std::vector<std::vector<std::size_t>> adjacency_;

  std::optional<Coloring> first_labels_;
  std::string first_certificate_;
  Coloring best_labels_;
  std::string best_certificate_;
  std::vector<NodePerm> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const UniformHypergraph& h) { return IncidenceSearch(h).run(); }

UniformHypergraph canonical_representative(const UniformHypergraph& h) {
  const auto labeling = canonical_labeling(h).labeling;
  return relabel(h, labeling);
}

}  // namespace hgm
