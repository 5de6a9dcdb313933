#include "hgm/moments.hpp"

#include "hgm/counting.hpp"
#include "hgm/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hgm {

namespace {

IntMatrix reduced_laplacian(const IntMatrix& arcs) {
  const Eigen::Index n = arcs.rows();
  IntMatrix laplacian = -arcs;
  for (Eigen::Index i = 0; i < n; ++i) laplacian(i, i) += arcs.row(i).sum();
  return laplacian.bottomRightCorner(n - 1, n - 1);
}

}  // namespace

MultiDigraph rooted_star_digraph(const UniformHypergraph& h, std::span<const RootedEdge> copies) {
  MultiDigraph g;
  for (const auto& c : copies) {
    if (!h.contains(c.edge, c.root)) {
      throw std::invalid_argument("root " + std::to_string(c.root) + " is not in edge " + std::to_string(c.edge));
    }
    for (Vertex v : h.edge(c.edge)) g.vertices.push_back(v);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  auto local = [&](Vertex v) {
    return std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin();
  };
  const auto size = static_cast<Eigen::Index>(g.vertices.size());
  g.arcs = IntMatrix::Zero(size, size);
  for (const auto& c : copies) {
    for (Vertex u : h.edge(c.edge)) {
      if (u != c.root) g.arcs(local(c.root), local(u)) += 1;
    }
  }
  return g;
}

bool is_eulerian(const MultiDigraph& g) {
  const Eigen::Index n = g.arcs.rows();
  if (n == 0) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (g.arcs.row(i).sum() != g.arcs.col(i).sum()) return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Eigen::Index> frontier;
  frontier.push(0);
  seen[0] = 1;
  Eigen::Index reached = 1;
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop();
    for (Eigen::Index y = 0; y < n; ++y) {
      if (!seen[y] && (g.arcs(x, y) > 0 || g.arcs(y, x) > 0)) {
        seen[y] = 1;
        ++reached;
        frontier.push(y);
      }
    }
  }
  return reached == n;
}

BigInt arborescence_count(const MultiDigraph& g) {
  if (!is_eulerian(g)) throw std::invalid_argument("arborescence count needs an Eulerian multi-digraph");
  return exact_determinant(reduced_laplacian(g.arcs));
}

BigInt ordering_weight(std::span<const RootedEdge> copies) {
  std::map<Vertex, std::map<EdgeIndex, int>> blocks;
  for (const auto& c : copies) ++blocks[c.root][c.edge];
  BigInt weight = 1;
  for (const auto& [root, multiplicities] : blocks) {
    int total = 0;
    BigInt denominator = 1;
    for (const auto& [edge, count] : multiplicities) {
      total += count;
      denominator *= factorial(count);
    }
    weight *= factorial(total) / denominator;
  }
  return weight;
}

EulerianConfig make_config(const UniformHypergraph& h, std::vector<RootedEdge> copies) {
  std::sort(copies.begin(), copies.end());
  EulerianConfig config;
  config.digraph = rooted_star_digraph(h, copies);
  config.root_counts.assign(config.digraph.vertices.size(), 0);
  for (const auto& c : copies) {
    const auto it = std::lower_bound(config.digraph.vertices.begin(), config.digraph.vertices.end(), c.root);
    ++config.root_counts[it - config.digraph.vertices.begin()];
  }
  config.weight = ordering_weight(copies);
  config.copies = std::move(copies);
  return config;
}

std::uint64_t default_cost_limit() {
  if (const char* text = std::getenv("HGM_COST_LIMIT")) {
    char* end = nullptr;
    const auto value = std::strtoull(text, &end, 10);
    if (end != text && *end == '\0' && value > 0) return value;
  }
  return 500'000'000ULL;
}

MomentOptions::MomentOptions() : cost_limit(default_cost_limit()) {}

namespace {

// Grouped form of the rooted-edge sum: first edge multiplicities a_e with every
// vertex count divisible by k, then root splits x_{e,v} with row sums a_e and
// column sums r_v = c_v / k.
class MomentEnumerator {
 public:
  MomentEnumerator(const UniformHypergraph& h, int d, std::uint64_t limit)
      : h_(h), k_(h.k()), d_(d), limit_(limit), multiplicity_(h.num_edges(), 0), count_(h.num_vertices(), 0) {
    order_ = traversal_order();
    last_position_.assign(h.num_vertices(), -1);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      for (Vertex v : h.edge(order_[pos])) last_position_[v] = static_cast<long>(pos);
    }
    has_cored_.resize(h.num_edges());
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
      has_cored_[e] = std::any_of(h.edge(e).begin(), h.edge(e).end(), [&](Vertex v) { return h.degree(v) == 1; });
    }
  }

  MomentResult run() {
    choose_multiplicity(0, d_);
    return {total_, work_, vectors_};
  }

 private:
  // Edges in breadth-first order over shared vertices so vertex counts close early.
  std::vector<EdgeIndex> traversal_order() const {
    std::vector<EdgeIndex> order;
    std::vector<char> placed(h_.num_edges(), 0);
    for (EdgeIndex start = 0; start < h_.num_edges(); ++start) {
      if (placed[start]) continue;
      placed[start] = 1;
      std::size_t head = order.size();
      order.push_back(start);
      while (head < order.size()) {
        const EdgeIndex e = order[head++];
        for (EdgeIndex f : edge_neighbors(h_, e)) {
          if (!placed[f]) {
            placed[f] = 1;
            order.push_back(f);
          }
        }
      }
    }
    return order;
  }

  void charge() {
    if (++work_ > limit_) {
      throw CostGuardExceeded("moment enumeration for d=" + std::to_string(d_) + " exceeded the cost limit of " +
                              std::to_string(limit_) + " search nodes");
    }
  }

  void choose_multiplicity(std::size_t pos, int remaining) {
    charge();
    if (remaining == 0) {
      // Remaining edges take multiplicity zero; their vertices must already balance.
      for (std::size_t rest = pos; rest < order_.size(); ++rest) {
        for (Vertex v : h_.edge(order_[rest])) {
          if (count_[v] % k_ != 0) return;
        }
      }
      process_vector();
      return;
    }
    if (pos == order_.size()) return;
    const EdgeIndex e = order_[pos];
    const int step = has_cored_[e] ? k_ : 1;
    for (int a = 0; a <= remaining; a += step) {
      multiplicity_[e] = a;
      for (Vertex v : h_.edge(e)) count_[v] += a;
      bool balanced = true;
      for (Vertex v : h_.edge(e)) {
        if (last_position_[v] == static_cast<long>(pos) && count_[v] % k_ != 0) balanced = false;
      }
      if (balanced) choose_multiplicity(pos + 1, remaining - a);
      for (Vertex v : h_.edge(e)) count_[v] -= a;
      multiplicity_[e] = 0;
    }
  }

  void process_vector() {
    support_.clear();
    for (EdgeIndex e : order_) {
      if (multiplicity_[e] > 0) support_.push_back(e);
    }
    if (!support_connected()) return;
    ++vectors_;

    vertices_.clear();
    for (EdgeIndex e : support_) {
      for (Vertex v : h_.edge(e)) vertices_.push_back(v);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    local_.assign(h_.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) local_[vertices_[i]] = static_cast<long>(i);

    const std::size_t size = vertices_.size();
    roots_left_.assign(size, 0);
    last_support_.assign(size, 0);
    root_factorials_ = 1;
    BigInt root_product = 1;
    for (std::size_t i = 0; i < size; ++i) {
      const int r = count_[vertices_[i]] / k_;
      roots_left_[i] = r;
      root_factorials_ *= factorial(r);
      root_product *= r;
    }
    for (std::size_t s = 0; s < support_.size(); ++s) {
      for (Vertex v : h_.edge(support_[s])) last_support_[local_[v]] = s;
    }
    split_.assign(support_.size() * k_, 0);
    vector_sum_ = 0;
    split_roots(0, 0, multiplicity_[support_[0]]);

    // Each configuration enters as weight * tau / prod_v (k-1) r_v, scaled by d (k-1)^n.
    Rational contribution(vector_sum_, root_product);
    contribution *= rational_pow(k_ - 1, static_cast<long>(h_.num_vertices()) - static_cast<long>(size));
    contribution *= d_;
    total_ += contribution;
  }

  bool support_connected() const {
    std::vector<Vertex> parent(h_.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (EdgeIndex e : support_) {
      const auto& edge = h_.edge(e);
      for (std::size_t j = 1; j < edge.size(); ++j) {
        const auto a = root(edge[0]);
        const auto b = root(edge[j]);
        if (a != b) parent[a] = b;
      }
    }
    const Vertex first = root(h_.edge(support_[0])[0]);
    return std::all_of(support_.begin(), support_.end(), [&](EdgeIndex e) { return root(h_.edge(e)[0]) == first; });
  }

  void split_roots(std::size_t s, int slot, int left) {
    charge();
    if (s == support_.size()) {
      evaluate_split();
      return;
    }
    const EdgeIndex e = support_[s];
    const auto& edge = h_.edge(e);
    const auto v = static_cast<std::size_t>(local_[edge[slot]]);
    const bool closes = last_support_[v] == s;
    const bool last_slot = slot == k_ - 1;
    int lo = 0;
    int hi = std::min(left, roots_left_[v]);
    if (closes) lo = roots_left_[v];
    if (last_slot) lo = std::max(lo, left);
    // The later slots of this edge cannot absorb more than their remaining capacity.
    int capacity_after = 0;
    for (int t = slot + 1; t < k_; ++t) capacity_after += roots_left_[local_[edge[t]]];
    lo = std::max(lo, left - capacity_after);
    for (int x = lo; x <= hi; ++x) {
      split_[s * k_ + slot] = x;
      roots_left_[v] -= x;
      if (last_slot) {
        split_roots(s + 1, 0, s + 1 < support_.size() ? multiplicity_[support_[s + 1]] : 0);
      } else {
        split_roots(s, slot + 1, left - x);
      }
      roots_left_[v] += x;
    }
    split_[s * k_ + slot] = 0;
  }

  void evaluate_split() {
    const auto size = static_cast<Eigen::Index>(vertices_.size());
    IntMatrix arcs = IntMatrix::Zero(size, size);
    BigInt split_factorials = 1;
    for (std::size_t s = 0; s < support_.size(); ++s) {
      const auto& edge = h_.edge(support_[s]);
      for (int slot = 0; slot < k_; ++slot) {
        const int x = split_[s * k_ + slot];
        if (x == 0) continue;
        split_factorials *= factorial(x);
        const auto from = local_[edge[slot]];
        for (int other = 0; other < k_; ++other) {
          if (other != slot) arcs(from, local_[edge[other]]) += x;
        }
      }
    }
    work_ += static_cast<std::uint64_t>(size);
    const BigInt tau = exact_determinant(reduced_laplacian(arcs));
    // Within-root orderings: prod_v r_v! / prod_{e,v} x_{e,v}!.
    vector_sum_ += root_factorials_ / split_factorials * tau;
  }

  const UniformHypergraph& h_;
  int k_;
  int d_;
  std::uint64_t limit_;
  std::vector<EdgeIndex> order_;
  std::vector<long> last_position_;
  std::vector<char> has_cored_;
  std::vector<int> multiplicity_;
  std::vector<int> count_;

  std::vector<EdgeIndex> support_;
  std::vector<Vertex> vertices_;
  std::vector<long> local_;
  std::vector<int> roots_left_;
  std::vector<std::size_t> last_support_;
  std::vector<int> split_;
  BigInt root_factorials_;
  BigInt vector_sum_;

  Rational total_;
  std::uint64_t work_ = 0;
  std::uint64_t vectors_ = 0;
};

}  // namespace

MomentResult spectral_moment_detailed(const UniformHypergraph& h, int d, const MomentOptions& options) {
  if (d < 0) throw std::invalid_argument("moment order must be non-negative");
  const long n = static_cast<long>(h.num_vertices());
  if (d == 0) return {Rational(n) * rational_pow(h.k() - 1, n - 1), 0, 0};
  if (h.num_edges() == 0) return {Rational(0), 0, 0};
  return MomentEnumerator(h, d, options.cost_limit).run();
}

std::optional<Rational> closed_form_moment(const UniformHypergraph& h, int d) {
  if (d < 0) return std::nullopt;
  const long k = h.k();
  const long n = static_cast<long>(h.num_vertices());
  const long m = static_cast<long>(h.num_edges());
  if (d == 0) return Rational(n) * rational_pow(k - 1, n - 1);
  if (d < k) return Rational(0);
  if (d == k) return Rational(m) * rational_pow(k, k - 1) * rational_pow(k - 1, n - k);
  if (k < 3 || !is_linear(h) || !is_bicyclic(h)) return std::nullopt;
  if (d % k != 0) return Rational(0);
  const Rational p1(m);
  const Rational p2(count_paths(h, 2));
  if (d == 2 * k) {
    return rational_pow(k, k - 1) * rational_pow(k - 1, n - k) * p1 +
           2 * rational_pow(k, 2 * k - 3) * rational_pow(k - 1, n - 2 * k + 1) * p2;
  }
  if (d == 3 * k) {
    const Rational p3(count_paths(h, 3));
    const Rational s3(count_star3(h));
    const Rational c3(count_cycles(h, 3));
    return rational_pow(k - 1, n - k) * rational_pow(k, k - 1) * p1 +
           6 * rational_pow(k, 2 * k - 3) * rational_pow(k - 1, n + 1 - 2 * k) * p2 +
           3 * rational_pow(k, 3 * k - 5) * rational_pow(k - 1, n + 2 - 3 * k) * p3 +
           6 * rational_pow(k, 3 * k - 5) * rational_pow(k - 1, n + 2 - 3 * k) * s3 +
           24 * rational_pow(k, 3 * k - 6) * rational_pow(k - 1, n - 3 * k + 3) * c3;
  }
  return std::nullopt;
}

std::string to_string(MomentMethod method) { return method == MomentMethod::closed ? "closed" : "enumerated"; }

std::vector<MomentEntry> moment_sequence(const UniformHypergraph& h, int d_max, const MomentOptions& options) {
  if (d_max < 0) throw std::invalid_argument("d_max must be non-negative");
  std::vector<MomentEntry> out;
  for (int d = 0; d <= d_max; ++d) {
    if (auto closed = closed_form_moment(h, d)) {
      out.push_back({d, std::move(*closed), MomentMethod::closed});
    } else {
      out.push_back({d, spectral_moment_exact(h, d, options), MomentMethod::enumerated});
    }
  }
  return out;
}

BigInt graph_trace_oracle(const SimpleGraph& g, int d) {
  if (d < 0) throw std::invalid_argument("power must be non-negative");
  const auto n = static_cast<Eigen::Index>(g.n);
  IntMatrix adjacency = IntMatrix::Zero(n, n);
  for (const auto& [a, b] : g.edges) {
    adjacency(a, b) = 1;
    adjacency(b, a) = 1;
  }
  return trace_of_power(adjacency, d);
}

}  // namespace hgm
