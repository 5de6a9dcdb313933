#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using hgm::Edge;
using hgm::Vertex;

namespace {

BigInt power(long base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

BigInt brute_arborescences(const std::vector<std::vector<int>>& arcs, int root) {
  const int n = static_cast<int>(arcs.size());
  std::vector<int> parent(n, -1);
  BigInt total = 0;
  std::function<void(int, BigInt)> choose = [&](int v, BigInt weight) {
    if (v == n) {
      for (int start = 0; start < n; ++start) {
        int at = start;
        for (int steps = 0; at != root; ++steps) {
          if (steps > n) return;
          at = parent[at];
        }
      }
      total += weight;
      return;
    }
    if (v == root) {
      choose(v + 1, weight);
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (u == v || arcs[v][u] == 0) continue;
      parent[v] = u;
      choose(v + 1, weight * arcs[v][u]);
    }
    parent[v] = -1;
  };
  choose(0, BigInt(1));
  return total;
}

Rational literal_moment(const UniformHypergraph& h, int d) {
  const int k = h.k();
  const auto n = static_cast<int>(h.num_vertices());
  if (d == 0) return Rational(n * power(k - 1, n - 1));

  struct Rooted {
    std::size_t edge;
    Vertex root;
  };
  std::vector<Rooted> rooted;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto& edge = h.edge(e);
      if (std::find(edge.begin(), edge.end(), v) != edge.end()) rooted.push_back({e, v});
    }
  }
  Rational sum = 0;
  std::vector<std::size_t> tuple;
  // `rooted` is sorted by root. Tuples are ordered only by root, so rooted edges
  // sharing a root may come in any order: each step restarts at the first entry
  // whose root equals the previous one.
  std::vector<std::size_t> first_of_root(n + 1, rooted.size());
  for (std::size_t i = rooted.size(); i-- > 0;) first_of_root[rooted[i].root] = i;
  std::function<void()> extend = [&] {
    if (static_cast<int>(tuple.size()) == d) {
      std::map<Vertex, int> local;
      for (auto i : tuple) {
        for (auto v : h.edge(rooted[i].edge)) local.emplace(v, 0);
      }
      int next = 0;
      for (auto& [v, id] : local) id = next++;
      std::vector<std::vector<int>> arcs(next, std::vector<int>(next, 0));
      std::vector<int> out(next, 0), in(next, 0), roots(next, 0);
      for (auto i : tuple) {
        const int r = local[rooted[i].root];
        ++roots[r];
        for (auto v : h.edge(rooted[i].edge)) {
          if (v == rooted[i].root) continue;
          ++arcs[r][local[v]];
          ++out[r];
          ++in[local[v]];
        }
      }
      for (int v = 0; v < next; ++v) {
        if (out[v] != in[v]) return;
      }
      std::vector<int> seen(next, 0);
      std::deque<int> queue{0};
      seen[0] = 1;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u = 0; u < next; ++u) {
          if ((arcs[v][u] > 0 || arcs[u][v] > 0) && !seen[u]) {
            seen[u] = 1;
            queue.push_back(u);
          }
        }
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return;
      BigInt degrees = 1;
      for (int v = 0; v < next; ++v) degrees *= (k - 1) * roots[v];
      sum += Rational(brute_arborescences(arcs, 0), degrees);
      return;
    }
    const Vertex floor = tuple.empty() ? 0 : rooted[tuple.back()].root;
    for (std::size_t i = first_of_root[floor]; i < rooted.size(); ++i) {
      tuple.push_back(i);
      extend();
      tuple.pop_back();
    }
  };
  extend();
  return Rational(d * power(k - 1, n)) * sum;
}

namespace {

struct Shape {
  std::size_t n;
  std::vector<std::vector<std::size_t>> incidence;
  std::set<Edge> edges;
};

Shape shape_of(const UniformHypergraph& h) {
  Shape s{h.num_vertices(), std::vector<std::vector<std::size_t>>(h.num_vertices()), {}};
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto v : h.edge(e)) s.incidence[v].push_back(e);
    Edge sorted = h.edge(e);
    std::sort(sorted.begin(), sorted.end());
    s.edges.insert(sorted);
  }
  return s;
}

}  // namespace

bool brute_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.k() != b.k() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const auto sa = shape_of(a);
  const auto sb = shape_of(b);
  const std::size_t n = sa.n;
  std::vector<std::size_t> da(n), db(n);
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = sa.incidence[v].size();
    db[v] = sb.incidence[v].size();
  }
  {
    auto x = da, y = db;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  constexpr Vertex unmapped = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> image(n, unmapped);
  std::vector<char> used(n, 0);
  // An a-edge whose vertices are all mapped must land on a b-edge.
  auto consistent = [&](Vertex v) {
    for (auto e : sa.incidence[v]) {
      Edge mapped;
      for (auto u : a.edge(e)) {
        if (image[u] == unmapped) break;
        mapped.push_back(image[u]);
      }
      if (mapped.size() < a.edge(e).size()) continue;
      std::sort(mapped.begin(), mapped.end());
      if (!sb.edges.contains(mapped)) return false;
    }
    return true;
  };
  std::function<bool(Vertex)> place = [&](Vertex v) {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      image[v] = w;
      used[w] = 1;
      if (consistent(v) && place(v + 1)) return true;
      used[w] = 0;
      image[v] = unmapped;
    }
    return false;
  };
  return place(0);
}

namespace {

std::vector<std::size_t> invariant_key(const UniformHypergraph& h) {
  std::vector<std::size_t> degrees(h.num_vertices(), 0);
  for (const auto& e : h.edges()) {
    for (auto v : e) ++degrees[v];
  }
  std::vector<std::size_t> edge_profile;
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> ds;
    for (auto v : e) ds.push_back(degrees[v]);
    std::sort(ds.begin(), ds.end());
    std::size_t code = 0;
    for (auto x : ds) code = code * 16 + x;
    edge_profile.push_back(code);
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(edge_profile.begin(), edge_profile.end());
  std::vector<std::size_t> key{h.num_vertices(), h.num_edges()};
  key.insert(key.end(), degrees.begin(), degrees.end());
  key.insert(key.end(), edge_profile.begin(), edge_profile.end());
  return key;
}

void add_unique(std::vector<UniformHypergraph>& out, std::map<std::vector<std::size_t>, std::vector<std::size_t>>& buckets,
                UniformHypergraph h) {
  auto& bucket = buckets[invariant_key(h)];
  for (auto i : bucket) {
    if (brute_isomorphic(out[i], h)) return;
  }
  bucket.push_back(out.size());
  out.push_back(std::move(h));
}

bool shares_two(const std::vector<Edge>& edges, const std::vector<Vertex>& chosen) {
  for (const auto& e : edges) {
    int common = 0;
    for (auto v : chosen) common += std::count(e.begin(), e.end(), v);
    if (common >= 2) return true;
  }
  return false;
}

}  // namespace

std::vector<UniformHypergraph> brute_linear_bicyclic(int k, int m) {
  if (k < 2 || m < 1) throw std::invalid_argument("need k >= 2 and m >= 1");
  Edge first(k);
  std::iota(first.begin(), first.end(), 0);
  std::vector<UniformHypergraph> level{UniformHypergraph(k, k, {first})};
  // excess = sum over added edges of (old vertices used - 1); bicyclic needs 2.
  for (int edges = 2; edges <= m; ++edges) {
    std::vector<UniformHypergraph> next;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    for (const auto& h : level) {
      const int n = static_cast<int>(h.num_vertices());
      const int excess = (edges - 1) * (k - 1) + 1 - n;
      for (int s = 1; s <= std::min(k, 3 - excess); ++s) {
        std::vector<Vertex> chosen;
        std::function<void(Vertex)> pick = [&](Vertex from) {
          if (static_cast<int>(chosen.size()) == s) {
            if (shares_two(h.edges(), chosen)) return;
            if (edges == m && excess + s - 1 != 2) return;
            auto list = h.edges();
            Edge added = chosen;
            for (int j = 0; j < k - s; ++j) added.push_back(static_cast<Vertex>(n + j));
            list.push_back(added);
            add_unique(next, buckets, UniformHypergraph(k, n + k - s, list));
            return;
          }
          for (Vertex v = from; v < static_cast<Vertex>(n); ++v) {
            chosen.push_back(v);
            pick(v + 1);
            chosen.pop_back();
          }
        };
        pick(0);
      }
    }
    level = std::move(next);
  }
  return level;
}

std::optional<int> incidence_girth(const UniformHypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t nodes = n + h.num_edges();
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto v : h.edge(e)) {
      adj[v].push_back(n + e);
      adj[n + e].push_back(v);
    }
  }
  std::optional<int> best;
  for (std::size_t source = 0; source < nodes; ++source) {
    std::vector<int> dist(nodes, -1);
    std::vector<std::size_t> parent(nodes, nodes);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const int length = dist[x] + dist[y] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  if (best) return *best / 2;
  return std::nullopt;
}

std::uint64_t naive_count(const UniformHypergraph& h, const UniformHypergraph& pattern) {
  const std::size_t size = pattern.num_edges();
  const std::size_t m = h.num_edges();
  if (size > m) return 0;
  std::uint64_t total = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == size) {
      std::map<Vertex, Vertex> local;
      for (auto e : pick) {
        for (auto v : h.edge(e)) local.emplace(v, 0);
      }
      if (local.size() != pattern.num_vertices()) return;
      Vertex next = 0;
      for (auto& [v, id] : local) id = next++;
      std::vector<Edge> edges;
      for (auto e : pick) {
        Edge mapped;
        for (auto v : h.edge(e)) mapped.push_back(local[v]);
        edges.push_back(mapped);
      }
      if (brute_isomorphic(UniformHypergraph(h.k(), local.size(), edges), pattern)) ++total;
      return;
    }
    for (std::size_t e = from; e < m; ++e) {
      pick.push_back(e);
      choose(e + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return total;
}

namespace {

// Builds hyperpath-like patterns: junction vertices first, then fresh filler vertices.
struct PatternBuilder {
  int k;
  Vertex next = 0;
  std::vector<Edge> edges;

  Vertex fresh() { return next++; }
  void edge(std::vector<Vertex> fixed) {
    while (static_cast<int>(fixed.size()) < k) fixed.push_back(fresh());
    edges.push_back(std::move(fixed));
  }
  UniformHypergraph done() const { return UniformHypergraph(k, next, edges); }
};

}  // namespace

UniformHypergraph path(int t, int k) {
  PatternBuilder b{k};
  Vertex left = b.fresh();
  for (int j = 0; j < t; ++j) {
    const Vertex right = b.fresh();
    b.edge({left, right});
    left = right;
  }
  return b.done();
}

UniformHypergraph cycle(int t, int k) {
  PatternBuilder b{k};
  std::vector<Vertex> ring;
  for (int j = 0; j < t; ++j) ring.push_back(b.fresh());
  for (int j = 0; j < t; ++j) b.edge({ring[j], ring[(j + 1) % t]});
  return b.done();
}

UniformHypergraph star(int t, int k) {
  PatternBuilder b{k};
  const Vertex center = b.fresh();
  for (int j = 0; j < t; ++j) b.edge({center});
  return b.done();
}

UniformHypergraph q_gadget(int t, int k) {
  PatternBuilder b{k};
  std::vector<Vertex> junction;
  for (int j = 0; j < t; ++j) junction.push_back(b.fresh());
  for (int j = 0; j + 1 < t; ++j) b.edge({junction[j], junction[j + 1]});
  // The second edge's first filler vertex.
  const Vertex hang = b.edges[1][2];
  b.edge({hang});
  return b.done();
}

UniformHypergraph w_gadget(int t, int k) {
  PatternBuilder b{k};
  std::vector<Vertex> ring;
  for (int j = 0; j < t - 1; ++j) ring.push_back(b.fresh());
  for (int j = 0; j < t - 1; ++j) b.edge({ring[j], ring[(j + 1) % (t - 1)]});
  const Vertex hang = k >= 3 ? b.edges[0][2] : ring[0];
  b.edge({hang});
  return b.done();
}

BigInt graph_trace(int n, const std::vector<std::pair<int, int>>& edges, int d) {
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : edges) {
    a[u][v] = 1;
    a[v][u] = 1;
  }
  std::vector<std::vector<BigInt>> power(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) power[i][i] = 1;
  for (int step = 0; step < d; ++step) {
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int t = 0; t < n; ++t) next[i][j] += power[i][t] * a[t][j];
      }
    }
    power = std::move(next);
  }
  BigInt trace = 0;
  for (int i = 0; i < n; ++i) trace += power[i][i];
  return trace;
}

UniformHypergraph random_hypergraph(std::mt19937_64& rng, int k, int n, int m) {
  std::set<Edge> chosen;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int guard = 0; static_cast<int>(chosen.size()) < m; ++guard) {
    if (guard > 100000) throw std::invalid_argument("not enough distinct edges");
    std::shuffle(all.begin(), all.end(), rng);
    Edge e(all.begin(), all.begin() + k);
    std::sort(e.begin(), e.end());
    chosen.insert(e);
  }
  return UniformHypergraph(k, n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

UniformHypergraph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return UniformHypergraph(2, n, edges);
}

}  // namespace oracle
