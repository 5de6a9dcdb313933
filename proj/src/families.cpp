#include "hgm/families.hpp"

#include "hgm/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hgm {

Vertex LabeledHypergraph::at(const std::string& name) const {
  const auto it = labels.find(name);
  if (it == labels.end()) throw std::invalid_argument("unknown vertex label '" + name + "'");
  return it->second;
}

namespace {

// Named vertices, identifications via union-find, compacted on finish().
class Builder {
 public:
  explicit Builder(int k) : k_(k) {}

  std::size_t vertex(const std::string& name) {
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    const std::size_t id = parent_.size();
    parent_.push_back(id);
    by_name_.emplace(name, id);
    return id;
  }

  std::size_t fresh() {
    const std::size_t id = parent_.size();
    parent_.push_back(id);
    return id;
  }

  // Edge through the two named junctions plus k-2 named degree-one vertices.
  void junction_edge(const std::string& edge_name, const std::string& a, const std::string& b) {
    std::vector<std::size_t> e{vertex(a), vertex(b)};
    for (int c = 0; c < k_ - 2; ++c) e.push_back(vertex(edge_name + ".c" + std::to_string(c)));
    edges_.push_back(std::move(e));
  }

  // Edge through one named vertex plus k-1 named degree-one vertices.
  void hanging_edge(const std::string& edge_name, const std::string& anchor) {
    std::vector<std::size_t> e{vertex(anchor)};
    for (int c = 0; c < k_ - 1; ++c) e.push_back(vertex(edge_name + ".c" + std::to_string(c)));
    edges_.push_back(std::move(e));
  }

  // Junctions junction_prefix{first}..{first+length}, edges edge_prefix1..edge_prefix{length}.
  void path(const std::string& junction_prefix, int first, const std::string& edge_prefix, int length) {
    vertex(junction_prefix + std::to_string(first));
    for (int j = 1; j <= length; ++j) {
      junction_edge(edge_prefix + std::to_string(j), junction_prefix + std::to_string(first + j - 1),
                    junction_prefix + std::to_string(first + j));
    }
  }

  // Edge j joins junctions j-1 and j, junction 0 being junction `length`.
  void cycle(const std::string& junction_prefix, const std::string& edge_prefix, int length) {
    for (int j = 1; j <= length; ++j) {
      const int previous = j == 1 ? length : j - 1;
      junction_edge(edge_prefix + std::to_string(j), junction_prefix + std::to_string(previous),
                    junction_prefix + std::to_string(j));
    }
  }

  void identify(const std::string& a, const std::string& b) {
    const auto ra = root(vertex(a));
    const auto rb = root(vertex(b));
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }

  LabeledHypergraph finish() {
    std::vector<long> compact(parent_.size(), -1);
    Vertex next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const auto r = root(x);
      if (compact[r] < 0) compact[r] = next++;
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
      Edge image;
      for (auto x : e) image.push_back(static_cast<Vertex>(compact[root(x)]));
      edges.push_back(std::move(image));
    }
    LabeledHypergraph out{UniformHypergraph(k_, next, std::move(edges)), {}};
    for (const auto& [name, id] : by_name_) out.labels.emplace(name, static_cast<Vertex>(compact[root(id)]));
    return out;
  }

 private:
  std::size_t root(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  int k_;
  std::vector<std::size_t> parent_;
  std::map<std::string, std::size_t> by_name_;
  std::vector<std::vector<std::size_t>> edges_;
};

std::string name(const char* prefix, int index) { return prefix + std::to_string(index); }

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

SimpleGraph path_graph(int q) {
  require(q >= 1, "path needs q >= 1");
  SimpleGraph g{static_cast<std::size_t>(q + 1), {}};
  for (int j = 0; j < q; ++j) g.edges.emplace_back(j, j + 1);
  return g;
}

SimpleGraph star_graph(int q) {
  require(q >= 1, "star needs q >= 1");
  SimpleGraph g{static_cast<std::size_t>(q + 1), {}};
  for (int j = 1; j <= q; ++j) g.edges.emplace_back(0, j);
  return g;
}

SimpleGraph cycle_graph(int q) {
  require(q >= 3, "cycle needs q >= 3");
  SimpleGraph g{static_cast<std::size_t>(q), {}};
  for (int j = 0; j < q; ++j) g.edges.emplace_back(j, (j + 1) % q);
  return g;
}

UniformHypergraph power_of_graph(const SimpleGraph& g, int k) {
  require(k >= 2, "power hypergraph needs k >= 2");
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(g.n);
  for (const auto& [a, b] : g.edges) {
    Edge e{a, b};
    for (int c = 0; c < k - 2; ++c) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(k, next, std::move(edges));
}

LabeledHypergraph power_path(int q, int k) {
  require(q >= 1, "path needs q >= 1");
  require(k >= 2, "k must be at least 2");
  Builder b(k);
  b.path("u", 0, "e", q);
  return b.finish();
}

LabeledHypergraph power_star(int q, int k) {
  require(q >= 1, "star needs q >= 1");
  require(k >= 2, "k must be at least 2");
  Builder b(k);
  for (int j = 1; j <= q; ++j) b.hanging_edge(name("e", j), "center");
  return b.finish();
}

LabeledHypergraph power_cycle(int q, int k) {
  require(q >= 3, "cycle needs q >= 3");
  require(k >= 2, "k must be at least 2");
  Builder b(k);
  b.cycle("x", "e", q);
  return b.finish();
}

std::optional<std::string> b_domain_violation(int i, int k, BParams params) {
  const auto [p, l, q] = params;
  if (i < 1 || i > 3) return "B family index i must be 1, 2 or 3";
  if (k < 3) return "B family needs k >= 3";
  if (p < 3) return "B family needs p >= 3";
  if (q < p) return "B family needs q >= p";
  if (l < 0) return "B family needs l >= 0";
  return std::nullopt;
}

std::optional<std::string> c_domain_violation(int i, int k, CParams params) {
  const auto [p, q, l] = params;
  if (k < 3) return "C family needs k >= 3";
  switch (i) {
    case 1:
      if ((p == 1 && 1 < q && q <= l) || (1 < p && p <= q && q <= l)) return std::nullopt;
      return "C_1 needs p=1, 1<q<=l or 1<p<=q<=l";
    case 2:
      if ((q > 1 && 1 <= p && p <= q - 1 && q - 1 <= l) || (q == 1 && 1 < p && p <= l)) return std::nullopt;
      return "C_2 needs q>1, 1<=p<=q-1<=l or q=1, 1<p<=l";
    case 3:
      if ((q > 2 && 1 <= p && p <= q - 2 && q - 2 <= l) || (q == 2 && 1 <= p && p <= l) ||
          (q == 1 && k > 3 && 1 < p && p <= l)) {
        return std::nullopt;
      }
      return "C_3 needs q>2, 1<=p<=q-2<=l or q=2, 1<=p<=l or q=1, k>3, 1<p<=l";
    default:
      return "C family index i must be 1, 2 or 3";
  }
}

LabeledHypergraph build_B(int i, int k, BParams params) {
  if (auto why = b_domain_violation(i, k, params)) throw std::invalid_argument(*why);
  const auto [p, l, q] = params;
  Builder b(k);
  b.cycle("x", "a", p);
  b.cycle("y", "b", q);
  b.path("u", 0, "e", l);
  const std::string start = name("u", 0);
  const std::string end = name("u", l);
  const std::string first_cycle_deg2 = name("x", p);
  const std::string first_cycle_deg1 = name("a", p) + ".c0";
  const std::string second_cycle_deg2 = name("y", q);
  const std::string second_cycle_deg1 = name("b", q) + ".c0";
  b.identify(i == 3 ? first_cycle_deg1 : first_cycle_deg2, start);
  b.identify(i == 1 ? second_cycle_deg2 : second_cycle_deg1, end);
  return b.finish();
}

LabeledHypergraph build_C(int i, int k, CParams params) {
  if (auto why = c_domain_violation(i, k, params)) throw std::invalid_argument(*why);
  const auto [p, q, l] = params;
  Builder b(k);
  b.path("u", 1, "e", p);
  b.path("v", 1, "f", q);
  b.path("w", 1, "g", l);
  b.identify("u1", "v1");
  b.identify(name("u", p + 1), name("v", q + 1));
  const std::string last_f_cored = name("f", q) + ".c0";
  switch (i) {
    case 1:
      b.identify("u1", "w1");
      b.identify(name("u", p + 1), name("w", l + 1));
      break;
    case 2:
      b.identify("u1", "w1");
      b.identify(name("w", l + 1), last_f_cored);
      break;
    default:
      b.identify("w1", "f1.c0");
      b.identify(name("w", l + 1), q == 1 ? std::string("f1.c1") : last_f_cored);
      break;
  }
  return b.finish();
}

LabeledHypergraph build_Q(int t, int k) {
  require(t >= 4, "Q_t needs t >= 4");
  require(k >= 3, "Q_t needs k >= 3");
  Builder b(k);
  b.path("u", 0, "e", t - 1);
  b.hanging_edge("h", "e2.c0");
  return b.finish();
}

LabeledHypergraph build_W(int t, int k) {
  require(t >= 4, "W_t needs t >= 4");
  require(k >= 2, "k must be at least 2");
  Builder b(k);
  b.cycle("x", "e", t - 1);
  b.hanging_edge("h", k >= 3 ? "e1.c0" : "x1");
  return b.finish();
}

UniformHypergraph attach_pendant_edges(const UniformHypergraph& h, Vertex v, int count) {
  require(v < h.num_vertices(), "attach site " + std::to_string(v) + " is not a vertex");
  require(count >= 0, "pendant edge count must be non-negative");
  auto edges = h.edges();
  Vertex next = static_cast<Vertex>(h.num_vertices());
  for (int c = 0; c < count; ++c) {
    Edge e{v};
    for (int j = 0; j < h.k() - 1; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(h.k(), next, std::move(edges));
}

UniformHypergraph attach_pendant_path(const UniformHypergraph& h, Vertex v, int length) {
  require(v < h.num_vertices(), "attach site " + std::to_string(v) + " is not a vertex");
  require(length >= 0, "pendant path length must be non-negative");
  auto edges = h.edges();
  Vertex next = static_cast<Vertex>(h.num_vertices());
  Vertex tail = v;
  for (int j = 0; j < length; ++j) {
    Edge e{tail};
    for (int c = 0; c < h.k() - 1; ++c) e.push_back(next++);
    tail = e.back();
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(h.k(), next, std::move(edges));
}

std::optional<PendantPath> find_pendant_path(const UniformHypergraph& h, Vertex anchor, EdgeIndex first_edge) {
  if (anchor >= h.num_vertices() || first_edge >= h.num_edges()) return std::nullopt;
  if (!h.contains(first_edge, anchor) || h.degree(anchor) < 2) return std::nullopt;
  PendantPath out{anchor, {}};
  EdgeIndex current = first_edge;
  Vertex entry = anchor;
  while (true) {
    if (std::find(out.edges.begin(), out.edges.end(), current) != out.edges.end()) return std::nullopt;
    out.edges.push_back(current);
    std::optional<Vertex> exit;
    for (Vertex x : h.edge(current)) {
      if (x == entry || h.degree(x) == 1) continue;
      if (h.degree(x) > 2 || exit) return std::nullopt;
      exit = x;
    }
    if (!exit) return out;
    const auto incident = h.incident_edges(*exit);
    current = incident[0] == current ? incident[1] : incident[0];
    entry = *exit;
  }
}

bool is_pendant_path(const UniformHypergraph& h, const PendantPath& path) {
  if (path.edges.empty()) return false;
  const auto found = find_pendant_path(h, path.anchor, path.edges.front());
  return found && found->edges == path.edges;
}

UniformHypergraph move_pendant_path(const UniformHypergraph& h, const PendantPath& path, Vertex v) {
  require(is_pendant_path(h, path), "not a pendant path at vertex " + std::to_string(path.anchor));
  require(v < h.num_vertices(), "target " + std::to_string(v) + " is not a vertex");
  for (EdgeIndex e : path.edges) require(!h.contains(e, v), "target vertex lies on the pendant path");
  auto edges = h.edges();
  auto& moved = edges[path.edges.front()];
  std::replace(moved.begin(), moved.end(), path.anchor, v);
  return UniformHypergraph(h.k(), h.num_vertices(), std::move(edges));
}

UniformHypergraph peel_pendant_edges(const UniformHypergraph& h) {
  UniformHypergraph current = h;
  while (current.num_edges() > 1) {
    const auto pendant = pendant_edges(current);
    if (pendant.empty()) break;
    std::vector<EdgeIndex> keep;
    for (EdgeIndex e = 0; e < current.num_edges(); ++e) {
      if (e != pendant.front()) keep.push_back(e);
    }
    current = edge_subhypergraph(current, keep);
  }
  return current;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::star: return "star";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::B: return "B";
    case FamilyKind::C: return "C";
    case FamilyKind::Q: return "Q";
    case FamilyKind::W: return "W";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_string(const std::string& name) {
  for (auto kind : {FamilyKind::path, FamilyKind::star, FamilyKind::cycle, FamilyKind::B, FamilyKind::C,
                    FamilyKind::Q, FamilyKind::W}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

LabeledHypergraph build_base(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path: return power_path(spec.q, spec.k);
    case FamilyKind::star: return power_star(spec.q, spec.k);
    case FamilyKind::cycle: return power_cycle(spec.q, spec.k);
    case FamilyKind::B: return build_B(spec.i, spec.k, {spec.p, spec.l, spec.q});
    case FamilyKind::C: return build_C(spec.i, spec.k, {spec.p, spec.q, spec.l});
    case FamilyKind::Q: return build_Q(spec.t, spec.k);
    case FamilyKind::W: return build_W(spec.t, spec.k);
  }
  throw std::invalid_argument("unknown family kind");
}

Vertex resolve_site(const LabeledHypergraph& base, const UniformHypergraph& current, const Attachment& a) {
  if (const auto* id = std::get_if<Vertex>(&a.site)) {
    require(*id < current.num_vertices(), "attach site " + std::to_string(*id) + " is not a vertex");
    return *id;
  }
  const auto& label = std::get<std::string>(a.site);
  if (label == "max_degree") {
    const auto degrees = degree_sequence(current).degrees;
    return static_cast<Vertex>(std::max_element(degrees.begin(), degrees.end()) - degrees.begin());
  }
  return base.at(label);
}

}  // namespace

UniformHypergraph build_family(const FamilySpec& spec) {
  const LabeledHypergraph base = build_base(spec);
  UniformHypergraph current = base.graph;
  for (const auto& a : spec.attach) {
    const Vertex site = resolve_site(base, current, a);
    current = attach_pendant_edges(current, site, a.pendant_edges);
    current = attach_pendant_path(current, site, a.path_len);
  }
  return current;
}

std::string describe(const FamilySpec& spec) {
  std::string out;
  switch (spec.kind) {
    case FamilyKind::path: out = "P_" + std::to_string(spec.q); break;
    case FamilyKind::star: out = "S_" + std::to_string(spec.q); break;
    case FamilyKind::cycle: out = "C_" + std::to_string(spec.q); break;
    case FamilyKind::B:
      out = "B_" + std::to_string(spec.i) + "(p=" + std::to_string(spec.p) + ",l=" + std::to_string(spec.l) +
            ",q=" + std::to_string(spec.q) + ")";
      break;
    case FamilyKind::C:
      out = "C_" + std::to_string(spec.i) + "(p=" + std::to_string(spec.p) + ",q=" + std::to_string(spec.q) +
            ",l=" + std::to_string(spec.l) + ")";
      break;
    case FamilyKind::Q: out = "Q_" + std::to_string(spec.t); break;
    case FamilyKind::W: out = "W_" + std::to_string(spec.t); break;
  }
  out += "^" + std::to_string(spec.k);
  for (const auto& a : spec.attach) {
    const std::string site =
        std::holds_alternative<Vertex>(a.site) ? std::to_string(std::get<Vertex>(a.site)) : std::get<std::string>(a.site);
    if (a.pendant_edges > 0) out += "+" + std::to_string(a.pendant_edges) + "pe@" + site;
    if (a.path_len > 0) out += "+path" + std::to_string(a.path_len) + "@" + site;
  }
  return out;
}

std::vector<FamilySpec> bases_with_edges(int k, int edges) {
  std::vector<FamilySpec> out;
  for (int i = 1; i <= 3; ++i) {
    for (int p = 3; 2 * p <= edges; ++p) {
      for (int q = p; p + q <= edges; ++q) {
        const int l = edges - p - q;
        if (b_admissible(i, k, {p, l, q})) out.push_back({FamilyKind::B, k, i, p, q, l, 0, {}});
      }
    }
  }
  for (int i = 1; i <= 3; ++i) {
    for (int p = 1; p <= edges; ++p) {
      for (int q = 1; p + q <= edges; ++q) {
        const int l = edges - p - q;
        if (c_admissible(i, k, {p, q, l})) out.push_back({FamilyKind::C, k, i, p, q, l, 0, {}});
      }
    }
  }
  return out;
}

namespace {

const std::map<CanonicalForm, BaseIdentity>& base_table(int k, int edges) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::map<CanonicalForm, BaseIdentity>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({k, edges});
  if (inserted) {
    for (const auto& spec : bases_with_edges(k, edges)) {
      BaseIdentity id{spec.kind, spec.i, spec.p, spec.q, spec.l};
      it->second.try_emplace(canonical_form(build_family(spec)), id);
    }
  }
  return it->second;
}

}  // namespace

std::optional<BaseIdentity> identify_base(const UniformHypergraph& h) {
  if (h.k() < 3 || !is_bicyclic(h) || !is_linear(h)) return std::nullopt;
  const auto base = peel_pendant_edges(h);
  const auto& table = base_table(h.k(), static_cast<int>(base.num_edges()));
  const auto it = table.find(canonical_form(base));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<UniformHypergraph> enumerate_linear_bicyclic(int k, int m, std::optional<int> g, EnumerationLimits limits) {
  require(k >= 3, "enumeration of linear bicyclic classes needs k >= 3");
  if (m > limits.max_edges || k > limits.max_k) {
    throw CostGuardExceeded("enumeration guard: k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                            " exceeds limits k<=" + std::to_string(limits.max_k) +
                            ", m<=" + std::to_string(limits.max_edges));
  }
  std::map<CanonicalForm, UniformHypergraph> level;
  auto add = [](std::map<CanonicalForm, UniformHypergraph>& into, const UniformHypergraph& h) {
    auto labeling = canonical_labeling(h);
    if (!into.contains(labeling.form)) into.emplace(labeling.form, relabel(h, labeling.labeling));
  };
  for (int edges = 1; edges <= m; ++edges) {
    std::map<CanonicalForm, UniformHypergraph> next;
    for (const auto& [form, h] : level) {
      // One attachment site per vertex orbit under the automorphisms found while labeling.
      const auto automorphisms = canonical_labeling(h).automorphisms;
      std::vector<Vertex> orbit(h.num_vertices());
      std::iota(orbit.begin(), orbit.end(), 0);
      auto root = [&](Vertex x) {
        while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
        return x;
      };
      for (const auto& a : automorphisms) {
        for (Vertex v = 0; v < h.num_vertices(); ++v) {
          const auto r1 = root(v);
          const auto r2 = root(a[v]);
          if (r1 != r2) orbit[std::max(r1, r2)] = std::min(r1, r2);
        }
      }
      for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (root(v) == v) add(next, attach_pendant_edges(h, v, 1));
      }
    }
    for (const auto& spec : bases_with_edges(k, edges)) add(next, build_family(spec));
    level = std::move(next);
  }
  std::vector<UniformHypergraph> out;
  for (auto& [form, h] : level) {
    if (!g || girth(h) == g) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace hgm
