#pragma once

#include "hgm/hypergraph.hpp"

#include <cstdint>
#include <string>

namespace hgm {

/// Sum of squared vertex degrees.
std::uint64_t zagreb_index(const UniformHypergraph& h);

/// Number of edge subsets of h whose sub-hypergraph (on the union of their
/// vertices) is isomorphic to pattern. Connected patterns are matched over
/// connected subsets only. Throws std::invalid_argument when k differs.
std::uint64_t count_pattern(const UniformHypergraph& h, const UniformHypergraph& pattern);

/// Hyperpaths with t edges.
std::uint64_t count_paths(const UniformHypergraph& h, int t);
/// Hypercycles with t edges; 0 for t < 3.
std::uint64_t count_cycles(const UniformHypergraph& h, int t);
/// Hyperstars with three edges.
std::uint64_t count_star3(const UniformHypergraph& h);
std::uint64_t count_Q(const UniformHypergraph& h, int t);
std::uint64_t count_W(const UniformHypergraph& h, int t);

struct PatternCount {
  std::string pattern;
  int t = 0;
  std::uint64_t count = 0;
};

}  // namespace hgm
