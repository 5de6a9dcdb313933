#pragma once

#include "hgm/counting.hpp"
#include "hgm/families.hpp"
#include "hgm/hypergraph.hpp"
#include "hgm/moments.hpp"
#include "hgm/order.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hgm {

/// Malformed input; the message names the offending position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"k": int, "n": int, "edges": [[int, ...], ...]}.
UniformHypergraph parse_hypergraph(const std::string& text);
/// Compact single-line JSON with edges as stored (ascending).
std::string emit_hypergraph(const UniformHypergraph& h);

/// {"kind": ..., "k": ..., "i"/"p"/"q"/"l"/"t": ..., "attach": [{"site": int|string, "path_len": int, "pendant_edges": int}]}.
FamilySpec parse_family_spec(const std::string& text);
std::string emit_family_spec(const FamilySpec& spec);

/// Header "d,numerator,denominator,method" and one row per moment.
std::string moments_csv(const std::vector<MomentEntry>& moments);
std::string moments_json(const std::vector<MomentEntry>& moments);

/// Header "pattern,t,count" and one row per count.
std::string counts_csv(const std::vector<PatternCount>& counts);
std::string counts_json(const std::vector<PatternCount>& counts);

std::string compare_json(const SOrderOutcome& outcome);
std::string report_json(const TheoremReport& report);

}  // namespace hgm
