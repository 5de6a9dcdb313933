#include "hgm/order.hpp"

#include "hgm/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgm {

std::string to_string(SRelation relation) {
  switch (relation) {
    case SRelation::precedes: return "precedes";
    case SRelation::succeeds: return "succeeds";
    case SRelation::equal_up_to_d_max: return "equal_up_to_d_max";
  }
  return "?";
}

SOrderOutcome compare_prefixes(std::span<const MomentEntry> a, std::span<const MomentEntry> b, int d_max) {
  if (d_max < 0 || a.size() <= static_cast<std::size_t>(d_max) || b.size() <= static_cast<std::size_t>(d_max)) {
    throw std::invalid_argument("moment prefixes shorter than d_max + 1");
  }
  for (int d = 0; d <= d_max; ++d) {
    if (a[d].value < b[d].value) return {SRelation::precedes, d, d_max};
    if (a[d].value > b[d].value) return {SRelation::succeeds, d, d_max};
  }
  return {SRelation::equal_up_to_d_max, std::nullopt, d_max};
}

MomentEntry moment_entry(const UniformHypergraph& h, int d, const MomentOptions& options) {
  if (auto closed = closed_form_moment(h, d)) return {d, std::move(*closed), MomentMethod::closed};
  return {d, spectral_moment_exact(h, d, options), MomentMethod::enumerated};
}

SOrderOutcome s_compare(const UniformHypergraph& a, const UniformHypergraph& b, int d_max,
                        const MomentOptions& options) {
  if (a.k() != b.k() || a.num_vertices() != b.num_vertices()) {
    throw std::invalid_argument("S-order compares hypergraphs with equal k and n (got k=" + std::to_string(a.k()) +
                                ", n=" + std::to_string(a.num_vertices()) + " vs k=" + std::to_string(b.k()) +
                                ", n=" + std::to_string(b.num_vertices()) + ")");
  }
  if (d_max < 0) throw std::invalid_argument("d_max must be non-negative");
  // Stop at the first difference instead of computing both full prefixes.
  for (int d = 0; d <= d_max; ++d) {
    const auto x = moment_entry(a, d, options).value;
    const auto y = moment_entry(b, d, options).value;
    if (x < y) return {SRelation::precedes, d, d_max};
    if (x > y) return {SRelation::succeeds, d, d_max};
  }
  return {SRelation::equal_up_to_d_max, std::nullopt, d_max};
}

ParallelFor serial_executor() {
  return [](std::size_t count, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
  };
}

namespace {

std::optional<int> latest(const std::vector<std::optional<int>>& stages) {
  std::optional<int> out;
  for (const auto& s : stages) {
    if (s && (!out || *s > *out)) out = s;
  }
  return out;
}

// Keeps the members whose latest moment is extreme; records when the rest dropped out.
void narrow(std::vector<std::size_t>& active, const std::vector<std::vector<MomentEntry>>& moments, int d,
            bool keep_minimum, std::vector<std::optional<int>>& left_at) {
  if (active.size() <= 1) return;
  Rational best = moments[active.front()][d].value;
  for (auto i : active) {
    const auto& v = moments[i][d].value;
    if (keep_minimum ? v < best : v > best) best = v;
  }
  std::vector<std::size_t> kept;
  for (auto i : active) {
    if (moments[i][d].value == best) {
      kept.push_back(i);
    } else {
      left_at[i] = d;
    }
  }
  active = std::move(kept);
}

}  // namespace

std::optional<int> ExtremalResult::first_decided_at() const { return latest(left_first_at); }
std::optional<int> ExtremalResult::last_decided_at() const { return latest(left_last_at); }

ExtremalResult find_extremal(std::span<const UniformHypergraph> members, int d_max, const MomentOptions& options,
                             const ParallelFor& executor) {
  if (members.empty()) throw std::invalid_argument("find_extremal needs a nonempty class");
  if (d_max < 0) throw std::invalid_argument("d_max must be non-negative");
  const std::size_t size = members.size();
  ExtremalResult out;
  out.d_max = d_max;
  out.left_first_at.assign(size, std::nullopt);
  out.left_last_at.assign(size, std::nullopt);
  out.moments.assign(size, {});
  std::vector<std::size_t> first(size);
  for (std::size_t i = 0; i < size; ++i) first[i] = i;
  std::vector<std::size_t> last = first;

  for (int d = 0; d <= d_max; ++d) {
    if (first.size() <= 1 && last.size() <= 1) break;
    std::vector<std::size_t> needed;
    if (first.size() > 1) needed.insert(needed.end(), first.begin(), first.end());
    if (last.size() > 1) needed.insert(needed.end(), last.begin(), last.end());
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
    // Each worker appends to its own member's table.
    executor(needed.size(), [&](std::size_t j) {
      const auto i = needed[j];
      out.moments[i].push_back(moment_entry(members[i], d, options));
    });
    narrow(first, out.moments, d, true, out.left_first_at);
    narrow(last, out.moments, d, false, out.left_last_at);
  }
  out.first = std::move(first);
  out.last = std::move(last);
  return out;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& text) {
  for (auto id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4}) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::string to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::match: return "MATCH";
    case VerifyStatus::mismatch: return "MISMATCH";
    case VerifyStatus::unresolved: return "UNRESOLVED";
    case VerifyStatus::not_claimed: return "NOT_CLAIMED";
  }
  return "?";
}

namespace {

FamilySpec b3(int k, int p, int l, int q, std::vector<Attachment> attach = {}) {
  return {FamilyKind::B, k, 3, p, q, l, 0, std::move(attach)};
}

FamilySpec c_spec(int i, int k, int p, int q, int l, std::vector<Attachment> attach = {}) {
  return {FamilyKind::C, k, i, p, q, l, 0, std::move(attach)};
}

bool admissible(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::B) return b_admissible(spec.i, spec.k, {spec.p, spec.l, spec.q});
  if (spec.kind == FamilyKind::C) return c_admissible(spec.i, spec.k, {spec.p, spec.q, spec.l});
  return true;
}

int edge_count(const FamilySpec& spec) {
  int edges = spec.p + spec.q + spec.l;
  for (const auto& a : spec.attach) edges += a.pendant_edges + a.path_len;
  return edges;
}

Attachment path_at(const std::string& site, int length) { return {site, 0, length}; }

// Degree-one vertex names on the hyperpath with edge prefix `prefix` and `edges` edges.
std::vector<std::string> cored_sites(const std::string& prefix, int edges, int slot = 0) {
  std::vector<std::string> out;
  for (int j = 1; j <= edges; ++j) out.push_back(prefix + std::to_string(j) + ".c" + std::to_string(slot));
  return out;
}

class ClaimTable {
 public:
  ClaimTable(int k, int m) : k_(k), m_(m) {}

  void add(TheoremId theorem, const FamilySpec& host, const std::string& pattern, int t, long expected,
           const std::string& formula) {
    if (!admissible(host) || edge_count(host) != m_) return;
    // An empty attachment is the bare base, which has its own stated value.
    for (const auto& a : host.attach) {
      if (a.path_len <= 0 && a.pendant_edges <= 0) return;
    }
    claims_.push_back({theorem, host, pattern, t, expected, formula});
  }

  std::vector<CountClaim> take() { return std::move(claims_); }

 private:
  int k_;
  int m_;
  std::vector<CountClaim> claims_;
};

void b_family_claims(ClaimTable& table, int k, int m) {
  using enum TheoremId;
  // Girth 3, both cycles of length 3.
  table.add(T2, b3(k, 3, m - 6, 3), "P", 3, m - 2, "m-2");
  table.add(T2, b3(k, 3, m - 6, 3), "C", 3, 2, "2");
  for (int q = 4; q <= m; ++q) {
    table.add(T2, b3(k, 3, m - 3 - q, q), "P", 3, m + 1, "m+1");
    table.add(T2, b3(k, 3, m - 3 - q, q), "C", 3, 1, "1");
  }
  for (int g = 4; 2 * g <= m; ++g) {
    for (int q = g; g + q <= m; ++q) {
      const auto host = b3(k, g, m - g - q, q);
      table.add(T2, host, "P", 3, m + 4, "m+4");
      table.add(T4, host, "P", 3, m + 4, "m+4");
      table.add(T4, host, "C", 3, 0, "0");
    }
  }
  for (int g = 5; 2 * g <= m; ++g) {
    for (int q = g; g + q <= m; ++q) {
      const int l = m - g - q;
      const auto host = b3(k, g, l, q);
      table.add(T2, host, "P", 4, l == 0 ? m + 8 : m + 7, l == 0 ? "m+8" : "m+7");
      table.add(T2, host, "W", 4, 0, "0");
      table.add(T2, host, "Q", 4, 2, "2");
      if (l > 0) {
        table.add(T4, host, "P", 4, m + 7, "m+7");
        table.add(T4, host, "W", 4, 0, "0");
        table.add(T4, host, "Q", 4, 2, "2");
      }
    }
  }
  // The girth-length counts.
  for (int g = 4; 2 * g <= m; ++g) {
    table.add(T2, b3(k, g, g - 4, g), "P", g, 4 * g - 8, "4g-8");
    table.add(T2, b3(k, g, g - 4, g), "C", g, 2, "2");
    for (int q = g + 1; q <= m; ++q) {
      table.add(T2, b3(k, g, g - 4, q), "P", g, m + 2 * g - 4, "m+2g-4");
      table.add(T2, b3(k, g, g - 4, q), "C", g, 1, "1");
    }
    if (m - 2 * g > g - 4) {
      table.add(T2, b3(k, g, m - 2 * g, g), "P", g, m + g - 5, "m+g-5");
      table.add(T2, b3(k, g, m - 2 * g, g), "C", g, 2, "2");
    }
    for (int q = g + 1; g + q <= m; ++q) {
      if (m - g - q <= g - 4) continue;
      table.add(T2, b3(k, g, m - g - q, q), "P", g, 2 * g - 5 + m, "2g-5+m");
      table.add(T2, b3(k, g, m - g - q, q), "C", g, 1, "1");
    }
  }
  // Counts at lengths t above the girth.
  for (int g = 3; 2 * g <= m; ++g) {
    for (int t = std::max(g + 1, 4); t <= m; ++t) {
      table.add(T2, b3(k, g, t - 4, t), "P", t, 2 * g + 2 * t - 8, "2g+2t-8");
      table.add(T2, b3(k, g, t - 4, t), "C", t, 1, "1");
      for (int q = t + 1; g + q <= m; ++q) {
        table.add(T2, b3(k, g, t - 4, q), "P", t, m + g + t - 4, "m+g+t-4");
        table.add(T2, b3(k, g, t - 4, q), "C", t, 0, "0");
      }
      if (m - g - t > t - 4) {
        table.add(T2, b3(k, g, m - g - t, t), "P", t, m + g - 5, "m+g-5");
        table.add(T2, b3(k, g, m - g - t, t), "C", t, 1, "1");
      }
      for (int q = t + 1; g + q <= m; ++q) {
        if (m - g - q <= t - 4) continue;
        table.add(T2, b3(k, g, m - g - q, q), "P", t, t + m + g - 5, "t+m+g-5");
        table.add(T2, b3(k, g, m - g - q, q), "C", t, 0, "0");
      }
    }
  }
  // Counts at lengths 5 <= t < g.
  for (int g = 6; 2 * g <= m; ++g) {
    for (int t = 5; t < g; ++t) {
      for (int q = g; g + q <= m; ++q) {
        const int l = m - g - q;
        if (l < t - 4) continue;
        table.add(T2, b3(k, g, l, q), "P", t, l == t - 4 ? m + 3 * t - 4 : m + 3 * t - 5,
                  l == t - 4 ? "m+3t-4" : "m+3t-5");
      }
    }
  }
  // Girth 3 against the path-heavy C member.
  for (int q = 5; q <= m; ++q) {
    const int l = m - 3 - q;
    if (l <= 0) continue;
    table.add(T4, b3(k, 3, l, q), "P", 3, m + 1, "m+1");
    table.add(T4, b3(k, 3, l, q), "C", 3, 1, "1");
    if (m > 8) {
      table.add(T4, b3(k, 3, l, q), "P", 4, m + 2, "m+2");
      table.add(T4, b3(k, 3, l, q), "W", 4, 1, "1");
      table.add(T4, b3(k, 3, l, q), "C", 4, 0, "0");
      table.add(T4, b3(k, 3, l, q), "Q", 4, 1, "1");
    }
  }
  if (m > 11) {
    for (int q = 6; q <= m; ++q) {
      const auto host = b3(k, 4, m - 4 - q, q);
      if (m - 4 - q <= 1) continue;
      table.add(T4, host, "P", 4, m + 3, "m+3");
      table.add(T4, host, "C", 4, 1, "1");
      table.add(T4, host, "W", 4, 0, "0");
      table.add(T4, host, "Q", 4, 2, "2");
      table.add(T4, host, "P", 5, m + 4, "m+4");
      table.add(T4, host, "Q", 5, 4, "4");
      table.add(T4, host, "W", 5, 1, "1");
    }
  }
  if (m > 12) {
    for (int q = 6; q <= m; ++q) {
      if (m - 5 - q <= 1) continue;
      table.add(T4, b3(k, 5, m - 5 - q, q), "P", 5, m + 5, "m+5");
    }
  }
}

void c_family_claims(ClaimTable& table, int k, int m) {
  using enum TheoremId;
  // Girth 3 with two triangles.
  table.add(T3, c_spec(3, k, 1, 2, 1), "C", 3, 2, "2");
  table.add(T3, c_spec(3, k, 1, 2, 1), "P", 3, 2, "2");
  {
    std::vector<std::string> outer = cored_sites("e", 1);
    for (const auto& s : cored_sites("g", 1)) outer.push_back(s);
    for (const auto& site : outer) {
      table.add(T3, c_spec(3, k, 1, 2, 1, {path_at(site, m - 4)}), "P", 3, m - 1, "m-1");
      table.add(T3, c_spec(3, k, 1, 2, 1, {path_at(site, m - 4)}), "C", 3, 2, "2");
    }
    if (k >= 4) {
      for (const auto& site : cored_sites("f", 2, 1)) {
        table.add(T3, c_spec(3, k, 1, 2, 1, {path_at(site, m - 4)}), "P", 3, m, "m");
      }
    }
  }
  for (int l = 2; l + 3 < m; ++l) {
    std::vector<std::string> outer = cored_sites("e", 1);
    for (const auto& s : cored_sites("g", l)) outer.push_back(s);
    for (const auto& site : outer) {
      table.add(T3, c_spec(3, k, 1, 2, l, {path_at(site, m - 3 - l)}), "P", 3, m + 2, "m+2");
      table.add(T3, c_spec(3, k, 1, 2, l, {path_at(site, m - 3 - l)}), "C", 3, 1, "1");
    }
    if (k >= 4) {
      for (const auto& site : cored_sites("f", 2, 1)) {
        table.add(T3, c_spec(3, k, 1, 2, l, {path_at(site, m - 3 - l)}), "P", 3, m + 3, "m+3");
      }
    }
  }
  if (m - 3 > 1) {
    table.add(T3, c_spec(3, k, 1, 2, m - 3), "C", 3, 1, "1");
    table.add(T3, c_spec(3, k, 1, 2, m - 3), "P", 3, m + 1, "m+1");
    table.add(T4, c_spec(3, k, 1, 2, m - 3), "P", 3, m + 1, "m+1");
    table.add(T4, c_spec(3, k, 1, 2, m - 3), "C", 3, 1, "1");
  }
  if (m > 8) {
    table.add(T4, c_spec(3, k, 1, 2, m - 3), "P", 4, m + 1, "m+1");
    table.add(T4, c_spec(3, k, 1, 2, m - 3), "W", 4, 2, "2");
    table.add(T4, c_spec(3, k, 1, 2, m - 3), "C", 4, 0, "0");
    table.add(T4, c_spec(3, k, 1, 2, m - 3), "Q", 4, 0, "0");
  }

  // Single-edge middle path (needs k > 3).
  table.add(T3, c_spec(3, k, 2, 1, 2), "C", 3, 2, "2");
  table.add(T3, c_spec(3, k, 2, 1, 2), "P", 3, 4, "4");
  {
    std::vector<std::string> outer = cored_sites("e", 2);
    for (const auto& s : cored_sites("g", 2)) outer.push_back(s);
    for (const auto& site : outer) {
      table.add(T3, c_spec(3, k, 2, 1, 2, {path_at(site, m - 5)}), "P", 3, m, "m");
    }
    if (k >= 5) table.add(T3, c_spec(3, k, 2, 1, 2, {path_at("f1.c2", m - 5)}), "P", 3, m + 2, "m+2");
  }
  for (int l = 3; l + 3 < m; ++l) {
    std::vector<std::string> outer = cored_sites("e", 2);
    for (const auto& s : cored_sites("g", l)) outer.push_back(s);
    for (const auto& site : outer) {
      table.add(T3, c_spec(3, k, 2, 1, l, {path_at(site, m - 3 - l)}), "P", 3, m + 3, "m+3");
      table.add(T3, c_spec(3, k, 2, 1, l, {path_at(site, m - 3 - l)}), "C", 3, 1, "1");
    }
    if (k >= 5) table.add(T3, c_spec(3, k, 2, 1, l, {path_at("f1.c2", m - 3 - l)}), "P", 3, m + 5, "m+5");
  }
  if (m - 3 > 2) {
    table.add(T3, c_spec(3, k, 2, 1, m - 3), "C", 3, 1, "1");
    table.add(T3, c_spec(3, k, 2, 1, m - 3), "P", 3, m + 2, "m+2");
  }

  // Girth above 3: path counts of length 3.
  for (int p = 3; p < m; ++p) {
    for (int l = p; p + 1 + l < m; ++l) {
      std::vector<std::string> outer = cored_sites("e", p);
      for (const auto& s : cored_sites("g", l)) outer.push_back(s);
      for (const auto& site : outer) {
        table.add(T3, c_spec(3, k, p, 1, l, {path_at(site, m - p - 1 - l)}), "P", 3, m + 6, "m+6");
      }
      if (k >= 5) table.add(T3, c_spec(3, k, p, 1, l, {path_at("f1.c2", m - p - 1 - l)}), "P", 3, m + 8, "m+8");
    }
    table.add(T3, c_spec(3, k, p, 1, m - p - 1), "P", 3, m + 5, "m+5");
  }
  for (int p = 2; p < m; ++p) {
    for (int l = p; p + 2 + l < m; ++l) {
      std::vector<std::string> outer = cored_sites("e", p);
      for (const auto& s : cored_sites("g", l)) outer.push_back(s);
      for (const auto& site : outer) {
        table.add(T3, c_spec(3, k, p, 2, l, {path_at(site, m - p - 2 - l)}), "P", 3, m + 5, "m+5");
      }
      if (k >= 4) {
        for (const auto& site : cored_sites("f", 2, 1)) {
          table.add(T3, c_spec(3, k, p, 2, l, {path_at(site, m - p - 2 - l)}), "P", 3, m + 6, "m+6");
        }
      }
    }
    table.add(T3, c_spec(3, k, p, 2, m - p - 2), "P", 3, m + 4, "m+4");
    table.add(T4, c_spec(3, k, p, 2, m - p - 2), "P", 3, m + 4, "m+4");
    table.add(T4, c_spec(3, k, p, 2, m - p - 2), "C", 3, 0, "0");
  }
  for (int q = 3; q < m; ++q) {
    for (int p = 1; p <= q - 2; ++p) {
      for (int l = q - 2; p + q + l < m; ++l) {
        std::vector<std::string> inner = cored_sites("e", p);
        for (const auto& s : cored_sites("g", l)) inner.push_back(s);
        for (int j = 2; j < q; ++j) inner.push_back("f" + std::to_string(j) + ".c0");
        for (const auto& site : inner) {
          table.add(T3, c_spec(3, k, p, q, l, {path_at(site, m - p - q - l)}), "P", 3, m + 5, "m+5");
        }
        if (k >= 4) {
          for (const auto& site : {std::string("f1.c1"), "f" + std::to_string(q) + ".c1"}) {
            table.add(T3, c_spec(3, k, p, q, l, {path_at(site, m - p - q - l)}), "P", 3, m + 6, "m+6");
          }
        }
      }
      table.add(T3, c_spec(3, k, p, q, m - p - q), "P", 3, m + 4, "m+4");
      const int g = p + q;
      if (2 * q >= g + 2 && q <= g - 1) {
        table.add(T4, c_spec(3, k, p, q, m - p - q), "P", 3, m + 4, "m+4");
        table.add(T4, c_spec(3, k, p, q, m - p - q), "C", 3, 0, "0");
      }
    }
  }

  // Girth 4.
  table.add(T3, c_spec(3, k, 2, 2, 2), "P", 4, 6, "6");
  table.add(T3, c_spec(3, k, 2, 2, 2), "C", 4, 2, "2");
  table.add(T3, c_spec(3, k, 2, 2, 2), "W", 4, 0, "0");
  table.add(T3, c_spec(3, k, 2, 2, 2), "Q", 4, 2, "2");
  if (m > 6) {
    table.add(T3, c_spec(3, k, 2, 2, m - 4), "P", 4, m + 4, "m+4");
    table.add(T3, c_spec(3, k, 2, 2, m - 4), "C", 4, 1, "1");
    table.add(T3, c_spec(3, k, 2, 2, m - 4), "W", 4, 0, "0");
    table.add(T3, c_spec(3, k, 2, 2, m - 4), "Q", 4, 2, "2");
  }
  table.add(T3, c_spec(3, k, 1, 3, 1), "P", 4, 0, "0");
  table.add(T3, c_spec(3, k, 1, 3, 1), "C", 4, 2, "2");
  table.add(T3, c_spec(3, k, 1, 3, 1), "W", 4, 0, "0");
  table.add(T3, c_spec(3, k, 1, 3, 1), "Q", 4, 2, "2");
  if (m > 5) {
    table.add(T3, c_spec(3, k, 1, 3, m - 4), "P", 4, m + 3, "m+3");
    table.add(T3, c_spec(3, k, 1, 3, m - 4), "C", 4, 1, "1");
    table.add(T3, c_spec(3, k, 1, 3, m - 4), "W", 4, 0, "0");
    table.add(T3, c_spec(3, k, 1, 3, m - 4), "Q", 4, 2, "2");
  }
  if (m > 11) {
    const auto host = c_spec(3, k, 1, 3, m - 4);
    table.add(T4, host, "P", 4, m + 3, "m+3");
    table.add(T4, host, "C", 4, 1, "1");
    table.add(T4, host, "W", 4, 0, "0");
    table.add(T4, host, "Q", 4, 2, "2");
    table.add(T4, host, "P", 5, m + 4, "m+4");
    table.add(T4, host, "Q", 5, 2, "2");
    table.add(T4, host, "W", 5, 2, "2");
  }
  if (m > 12) table.add(T4, c_spec(3, k, 1, 4, m - 5), "P", 5, m + 6, "m+6");

  // Girth above 4: length-4 counts.
  for (int p = 3; p + 2 < m; ++p) {
    table.add(T3, c_spec(3, k, p, 2, m - p - 2), "P", 4, m + 8, "m+8");
    table.add(T3, c_spec(3, k, p, 2, m - p - 2), "Q", 4, 2, "2");
  }
  for (int q = 4; q < m; ++q) {
    for (int p = 1; p + q < m; ++p) {
      if (p + q <= 4) continue;
      const auto host = c_spec(3, k, p, q, m - p - q);
      table.add(T3, host, "P", 4, m + 7, "m+7");
      table.add(T3, host, "Q", 4, 2, "2");
      const int g = p + q;
      if (2 * q >= g + 2 && q <= g - 1 && g >= 5) {
        table.add(T4, host, "P", 4, m + 7, "m+7");
        table.add(T4, host, "W", 4, 0, "0");
        table.add(T4, host, "Q", 4, 2, "2");
      }
    }
  }
  // Longer paths on the girth-g member.
  for (int i = 5; i <= m; ++i) {
    for (int g = 2 * i - 4; g < m; ++g) {
      if (m - g < i - 2) continue;
      table.add(T3, c_spec(3, k, i - 4, g - i + 4, m - g), "P", i, m + 3 * i - 4, "m+3i-4");
      for (int q = (g + 3) / 2; q < g - i + 4; ++q) {
        if (2 * q < g + 2) continue;
        table.add(T3, c_spec(3, k, g - q, q, m - g), "P", i, m + 3 * i - 5, "m+3i-5");
      }
    }
  }
}

}  // namespace

std::vector<CountClaim> proof_count_claims(int k, int m) {
  ClaimTable table(k, m);
  b_family_claims(table, k, m);
  c_family_claims(table, k, m);
  return table.take();
}

std::uint64_t count_named_pattern(const UniformHypergraph& h, const std::string& pattern, int t) {
  if (pattern == "P") return count_paths(h, t);
  if (pattern == "C") return count_cycles(h, t);
  if (pattern == "S" && t == 3) return count_star3(h);
  if (pattern == "S") return count_pattern(h, power_star(t, h.k()).graph);
  if (pattern == "Q") return count_Q(h, t);
  if (pattern == "W") return count_W(h, t);
  throw std::invalid_argument("unknown pattern '" + pattern + "'");
}

CountCheck check_claim(const CountClaim& claim) {
  const auto host = build_family(claim.host);
  return {claim, count_named_pattern(host, claim.pattern, claim.t)};
}

std::optional<FamilySpec> theorem_expectation(TheoremId id, int k, int m, int g) {
  std::optional<FamilySpec> out;
  switch (id) {
    case TheoremId::T1:
      if (m < 2 * g) break;
      if (g % 2 == 0) {
        out = c_spec(1, k, g / 2, g / 2, g / 2, {Attachment{std::string("u1"), m - 3 * g / 2, 0}});
      } else {
        out = c_spec(2, k, g / 2, (g + 1) / 2, g / 2, {Attachment{std::string("u1"), m - g - g / 2, 0}});
      }
      break;
    case TheoremId::T2:
      if (m == 2 * g) {
        out = b3(k, g, 0, g);
      } else if (m == 3 * g - 4 && g > 4) {
        out = b3(k, g, g - 4, g);
      } else if (m == 3 * g - 3 && g >= 4) {
        out = b3(k, g, g - 4, g + 1);
      } else if ((m - g + 3) % 2 == 0 && (m - g + 3) / 2 > g) {
        const int t = (m - g + 3) / 2;
        out = b3(k, g, t - 4, t + 1);
      } else if ((m - g + 2) % 2 == 0 && (m - g + 2) / 2 >= g) {
        const int t = (m - g + 2) / 2;
        out = b3(k, g, t - 3, t + 1);
      }
      break;
    case TheoremId::T3:
      if (g == 3 && m >= 4) {
        out = c_spec(3, k, 1, 2, m - 3);
      } else if (g > 3 && g % 2 == 0 && 2 * m >= 3 * g) {
        out = c_spec(3, k, g - (g + 2) / 2, (g + 2) / 2, m - g);
      } else if (g > 3 && g % 2 == 1 && 2 * m >= 3 * g - 1) {
        const int q = (g + 3) / 2;
        out = c_spec(3, k, g - q, q, m - g);
      }
      break;
    case TheoremId::T4:
      if ((m - g + 3) % 2 == 0 && (m - g + 3) / 2 > g + 1) {
        const int t = (m - g + 3) / 2;
        out = b3(k, g, t - 4, t + 1);
      } else if ((m - g + 2) % 2 == 0 && (m - g + 2) / 2 >= g + 1) {
        const int t = (m - g + 2) / 2;
        out = b3(k, g, t - 3, t + 1);
      }
      break;
  }
  if (out && !admissible(*out)) return std::nullopt;
  return out;
}

std::vector<UniformHypergraph> theorem_class(TheoremId id, int k, int m, int g, EnumerationLimits limits) {
  auto members = enumerate_linear_bicyclic(k, m, g, limits);
  if (id == TheoremId::T1 || id == TheoremId::T4) return members;
  const FamilyKind wanted = id == TheoremId::T2 ? FamilyKind::B : FamilyKind::C;
  std::vector<UniformHypergraph> out;
  for (auto& h : members) {
    const auto base = identify_base(h);
    if (base && base->kind == wanted) out.push_back(std::move(h));
  }
  return out;
}

TheoremReport verify_theorem(TheoremId id, int k, int m, int g, int d_max, const MomentOptions& options,
                             const ParallelFor& executor, EnumerationLimits limits) {
  if (k < 3) throw std::invalid_argument("theorem verification needs k >= 3");
  if (g < 3) throw std::invalid_argument("girth must be at least 3");
  if (id == TheoremId::T1 && m < 2 * g) throw std::invalid_argument("T1 needs m >= 2g");
  if (d_max < 0) throw std::invalid_argument("d_max must be non-negative");

  TheoremReport report;
  report.theorem = id;
  report.k = k;
  report.m = m;
  report.g = g;
  report.d_max = d_max;
  report.extreme = id == TheoremId::T1 ? "last" : "first";
  report.expected = theorem_expectation(id, k, m, g);

  std::optional<UniformHypergraph> expected_graph;
  if (report.expected) {
    report.expected_description = describe(*report.expected);
    expected_graph = build_family(*report.expected);
    report.expected_form = canonical_form(*expected_graph);
  }

  const auto members = theorem_class(id, k, m, g, limits);
  report.class_size = members.size();
  for (const auto& claim : proof_count_claims(k, m)) {
    if (claim.theorem == id) report.count_checks.push_back(check_claim(claim));
  }
  if (members.empty()) {
    report.status = report.expected ? VerifyStatus::mismatch : VerifyStatus::not_claimed;
    report.note = "the class is empty";
    return report;
  }

  const auto result = find_extremal(members, d_max, options, executor);
  const auto& tied = id == TheoremId::T1 ? result.last : result.first;
  report.first_diff_index = id == TheoremId::T1 ? result.last_decided_at() : result.first_decided_at();
  std::vector<std::pair<CanonicalForm, std::size_t>> found;
  for (auto i : tied) found.emplace_back(canonical_form(members[i]), i);
  std::sort(found.begin(), found.end());
  for (const auto& [form, i] : found) report.found_forms.push_back(form);

  if (expected_graph) {
    report.moment_tables.push_back(
        {"expected " + report.expected_description, report.expected_form->hex(), moment_sequence(*expected_graph, d_max, options)});
  }
  for (const auto& [form, i] : found) {
    report.moment_tables.push_back({"found", form.hex(), moment_sequence(members[i], d_max, options)});
  }

  if (!report.expected) {
    report.status = VerifyStatus::not_claimed;
    report.note = "the theorem states no extremal hypergraph for these parameters";
    return report;
  }
  const bool expected_in_class =
      std::any_of(members.begin(), members.end(), [&](const auto& h) { return canonical_form(h) == *report.expected_form; });
  const bool expected_tied =
      std::find(report.found_forms.begin(), report.found_forms.end(), *report.expected_form) != report.found_forms.end();
  if (!expected_in_class) {
    report.status = VerifyStatus::mismatch;
    report.note = "the stated hypergraph is not a member of the class";
  } else if (expected_tied && report.found_forms.size() == 1) {
    report.status = VerifyStatus::match;
  } else if (expected_tied) {
    report.status = VerifyStatus::unresolved;
    report.note = std::to_string(report.found_forms.size()) + " members remain tied after d_max";
  } else {
    report.status = VerifyStatus::mismatch;
  }
  return report;
}

}  // namespace hgm
