#include "hgm/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <variant>

namespace hgm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError("invalid JSON at byte " + std::to_string(error.byte) + ": " + error.what());
  }
}

const json& field(const json& object, const std::string& key, const std::string& where) {
  if (!object.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return object.at(key);
}

long long integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<long long>();
}

int small_int(const json& value, const std::string& where) {
  const auto x = integer(value, where);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw ParseError(where + ": integer out of range");
  }
  return static_cast<int>(x);
}

}  // namespace

UniformHypergraph parse_hypergraph(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("$: expected an object");
  const long long k = integer(field(doc, "k", "$"), "$.k");
  const long long n = integer(field(doc, "n", "$"), "$.n");
  if (k < 1) throw ParseError("$.k: must be positive");
  if (n < 0) throw ParseError("$.n: must be non-negative");
  const json& edges = field(doc, "edges", "$");
  if (!edges.is_array()) throw ParseError("$.edges: expected an array");

  std::vector<Edge> out;
  std::vector<Edge> sorted;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "$.edges[" + std::to_string(e) + "]";
    if (!edges[e].is_array()) throw ParseError(where + ": expected an array");
    if (static_cast<long long>(edges[e].size()) != k) {
      throw ParseError(where + ": has " + std::to_string(edges[e].size()) + " vertices, expected k=" + std::to_string(k));
    }
    Edge edge;
    for (std::size_t j = 0; j < edges[e].size(); ++j) {
      const std::string at = where + "[" + std::to_string(j) + "]";
      const long long v = integer(edges[e][j], at);
      if (v < 0 || v >= n) throw ParseError(at + ": vertex " + std::to_string(v) + " outside [0, n)");
      edge.push_back(static_cast<Vertex>(v));
    }
    Edge key = edge;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) throw ParseError(where + ": repeated vertex");
    for (std::size_t f = 0; f < sorted.size(); ++f) {
      if (sorted[f] == key) {
        throw ParseError(where + ": duplicates $.edges[" + std::to_string(f) + "]");
      }
    }
    sorted.push_back(std::move(key));
    out.push_back(std::move(edge));
  }
  return UniformHypergraph(static_cast<int>(k), static_cast<std::size_t>(n), std::move(out));
}

std::string emit_hypergraph(const UniformHypergraph& h) {
  ordered_json doc;
  doc["k"] = h.k();
  doc["n"] = h.num_vertices();
  doc["edges"] = h.edges();
  return doc.dump();
}

FamilySpec parse_family_spec(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("$: expected an object");
  FamilySpec spec;
  const json& kind = field(doc, "kind", "$");
  if (!kind.is_string()) throw ParseError("$.kind: expected a string");
  const auto parsed = family_kind_from_string(kind.get<std::string>());
  if (!parsed) throw ParseError("$.kind: unknown family '" + kind.get<std::string>() + "'");
  spec.kind = *parsed;
  spec.k = small_int(field(doc, "k", "$"), "$.k");
  for (auto [key, slot] : {std::pair<const char*, int*>{"i", &spec.i}, {"p", &spec.p}, {"q", &spec.q},
                           {"l", &spec.l}, {"t", &spec.t}}) {
    if (doc.contains(key)) *slot = small_int(doc.at(key), std::string("$.") + key);
  }
  if (doc.contains("attach")) {
    const json& list = doc.at("attach");
    if (!list.is_array()) throw ParseError("$.attach: expected an array");
    for (std::size_t a = 0; a < list.size(); ++a) {
      const std::string where = "$.attach[" + std::to_string(a) + "]";
      if (!list[a].is_object()) throw ParseError(where + ": expected an object");
      Attachment item;
      const json& site = field(list[a], "site", where);
      if (site.is_string()) {
        item.site = site.get<std::string>();
      } else {
        const auto v = integer(site, where + ".site");
        if (v < 0) throw ParseError(where + ".site: negative vertex");
        item.site = static_cast<Vertex>(v);
      }
      if (list[a].contains("path_len")) item.path_len = small_int(list[a].at("path_len"), where + ".path_len");
      if (list[a].contains("pendant_edges")) {
        item.pendant_edges = small_int(list[a].at("pendant_edges"), where + ".pendant_edges");
      }
      if (item.path_len < 0 || item.pendant_edges < 0) throw ParseError(where + ": negative size");
      spec.attach.push_back(std::move(item));
    }
  }
  return spec;
}

namespace {

ordered_json family_json(const FamilySpec& spec) {
  ordered_json doc;
  doc["kind"] = to_string(spec.kind);
  doc["k"] = spec.k;
  if (spec.kind == FamilyKind::B || spec.kind == FamilyKind::C) doc["i"] = spec.i;
  if (spec.kind == FamilyKind::Q || spec.kind == FamilyKind::W) {
    doc["t"] = spec.t;
  } else {
    doc["p"] = spec.p;
    doc["q"] = spec.q;
    doc["l"] = spec.l;
  }
  ordered_json attach = ordered_json::array();
  for (const auto& a : spec.attach) {
    ordered_json item;
    if (const auto* v = std::get_if<Vertex>(&a.site)) {
      item["site"] = *v;
    } else {
      item["site"] = std::get<std::string>(a.site);
    }
    item["path_len"] = a.path_len;
    item["pendant_edges"] = a.pendant_edges;
    attach.push_back(std::move(item));
  }
  doc["attach"] = std::move(attach);
  return doc;
}

ordered_json moment_rows(const std::vector<MomentEntry>& moments) {
  ordered_json rows = ordered_json::array();
  for (const auto& m : moments) {
    ordered_json row;
    row["d"] = m.d;
    row["numerator"] = to_string(BigInt(numerator(m.value)));
    row["denominator"] = to_string(BigInt(denominator(m.value)));
    row["method"] = to_string(m.method);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string emit_family_spec(const FamilySpec& spec) { return family_json(spec).dump(); }

std::string moments_csv(const std::vector<MomentEntry>& moments) {
  std::ostringstream out;
  out << "d,numerator,denominator,method\n";
  for (const auto& m : moments) {
    out << m.d << ',' << to_string(BigInt(numerator(m.value))) << ',' << to_string(BigInt(denominator(m.value)))
        << ',' << to_string(m.method) << '\n';
  }
  return out.str();
}

std::string moments_json(const std::vector<MomentEntry>& moments) { return moment_rows(moments).dump(2) + "\n"; }

std::string counts_csv(const std::vector<PatternCount>& counts) {
  std::ostringstream out;
  out << "pattern,t,count\n";
  for (const auto& c : counts) out << c.pattern << ',' << c.t << ',' << c.count << '\n';
  return out.str();
}

std::string counts_json(const std::vector<PatternCount>& counts) {
  ordered_json rows = ordered_json::array();
  for (const auto& c : counts) rows.push_back({{"pattern", c.pattern}, {"t", c.t}, {"count", c.count}});
  return rows.dump(2) + "\n";
}

std::string compare_json(const SOrderOutcome& outcome) {
  ordered_json doc;
  doc["relation"] = to_string(outcome.relation);
  doc["first_diff"] = outcome.first_diff ? ordered_json(*outcome.first_diff) : ordered_json(nullptr);
  doc["d_max"] = outcome.d_max;
  return doc.dump(2) + "\n";
}

std::string report_json(const TheoremReport& report) {
  ordered_json doc;
  doc["theorem"] = to_string(report.theorem);
  doc["params"] = {{"k", report.k}, {"m", report.m}, {"g", report.g}, {"d_max", report.d_max}};
  doc["extreme"] = report.extreme;
  doc["expected"] = report.expected ? family_json(*report.expected) : ordered_json(nullptr);
  doc["expected_description"] = report.expected_description;
  doc["expected_canonical_form"] = report.expected_form ? ordered_json(report.expected_form->hex()) : ordered_json(nullptr);
  ordered_json found = ordered_json::array();
  for (const auto& f : report.found_forms) found.push_back(f.hex());
  doc["found_canonical_form"] = std::move(found);
  doc["status"] = to_string(report.status);
  doc["first_diff_index"] = report.first_diff_index ? ordered_json(*report.first_diff_index) : ordered_json(nullptr);
  doc["class_size"] = report.class_size;
  ordered_json tables = ordered_json::array();
  for (const auto& t : report.moment_tables) {
    tables.push_back({{"label", t.label}, {"canonical_form", t.canonical_form}, {"moments", moment_rows(t.moments)}});
  }
  doc["moment_tables"] = std::move(tables);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.count_checks) {
    checks.push_back({{"host", describe(c.claim.host)},
                      {"pattern", c.claim.pattern},
                      {"t", c.claim.t},
                      {"formula", c.claim.formula},
                      {"expected", c.claim.expected},
                      {"found", c.found},
                      {"ok", c.ok()}});
  }
  doc["count_checks"] = std::move(checks);
  doc["note"] = report.note;
  return doc.dump(2) + "\n";
}

}  // namespace hgm
