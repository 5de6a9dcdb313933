#pragma once

#include "hgm/canonical.hpp"
#include "hgm/families.hpp"
#include "hgm/moments.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgm {

enum class SRelation { precedes, succeeds, equal_up_to_d_max };
std::string to_string(SRelation relation);

/// Lexicographic comparison of S_0..S_{d_max}. equal_up_to_d_max is weaker
/// than spectral equality, which would need every moment.
struct SOrderOutcome {
  SRelation relation = SRelation::equal_up_to_d_max;
  std::optional<int> first_diff;
  int d_max = 0;
};

SOrderOutcome compare_prefixes(std::span<const MomentEntry> a, std::span<const MomentEntry> b, int d_max);

/// Throws std::invalid_argument when n or k differ, or d_max < 0.
SOrderOutcome s_compare(const UniformHypergraph& a, const UniformHypergraph& b, int d_max,
                        const MomentOptions& options = {});

/// Runs body(i) for every i in [0, count); may run in parallel.
using ParallelFor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;
ParallelFor serial_executor();

/// S_d for one hypergraph, closed form preferred.
MomentEntry moment_entry(const UniformHypergraph& h, int d, const MomentOptions& options = {});

struct ExtremalResult {
  int d_max = 0;
  /// Members tied for first (minimum) and last (maximum) after d_max; singletons when resolved.
  std::vector<std::size_t> first;
  std::vector<std::size_t> last;
  /// Moment index at which each member dropped out of contention; nullopt for the tied set.
  std::vector<std::optional<int>> left_first_at;
  std::vector<std::optional<int>> left_last_at;
  /// Prefix of moments computed for each member; members drop out early, so lengths vary.
  std::vector<std::vector<MomentEntry>> moments;

  /// Index at which the first (last) set became what it is; nullopt for a singleton class.
  std::optional<int> first_decided_at() const;
  std::optional<int> last_decided_at() const;
};

/// Minimum and maximum of the class under the truncated S-order. Moments are
/// computed stage by stage only for members still in contention. Throws
/// std::invalid_argument on an empty class.
ExtremalResult find_extremal(std::span<const UniformHypergraph> members, int d_max, const MomentOptions& options = {},
                             const ParallelFor& executor = serial_executor());

enum class TheoremId { T1, T2, T3, T4 };
std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& text);

enum class VerifyStatus { match, mismatch, unresolved, not_claimed };
std::string to_string(VerifyStatus status);

/// A stated subhypergraph count, instantiated on a concrete hypergraph.
struct CountClaim {
  TheoremId theorem = TheoremId::T2;
  FamilySpec host;
  std::string pattern;  // "P", "C", "S", "Q" or "W"
  int t = 0;
  std::int64_t expected = 0;
  std::string formula;
};

/// Every stated count whose host exists for this k with exactly m edges.
std::vector<CountClaim> proof_count_claims(int k, int m);

struct CountCheck {
  CountClaim claim;
  std::uint64_t found = 0;
  bool ok() const { return static_cast<std::int64_t>(found) == claim.expected; }
};

CountCheck check_claim(const CountClaim& claim);
std::uint64_t count_named_pattern(const UniformHypergraph& h, const std::string& pattern, int t);

struct MomentTable {
  std::string label;
  std::string canonical_form;
  std::vector<MomentEntry> moments;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::T1;
  int k = 0;
  int m = 0;
  int g = 0;
  int d_max = 0;
  /// "first" or "last".
  std::string extreme;
  std::optional<FamilySpec> expected;
  std::string expected_description;
  std::optional<CanonicalForm> expected_form;
  std::vector<CanonicalForm> found_forms;
  VerifyStatus status = VerifyStatus::not_claimed;
  std::optional<int> first_diff_index;
  std::size_t class_size = 0;
  std::vector<MomentTable> moment_tables;
  std::vector<CountCheck> count_checks;
  std::string note;
};

/// The extremal hypergraph a theorem names for (k, m, g), or nullopt when the
/// theorem makes no claim at these parameters.
std::optional<FamilySpec> theorem_expectation(TheoremId id, int k, int m, int g);

/// The class a theorem quantifies over, one member per isomorphism class.
std::vector<UniformHypergraph> theorem_class(TheoremId id, int k, int m, int g, EnumerationLimits limits = {});

/// Builds the class, finds the relevant extreme under the truncated order and
/// compares it with the theorem's hypergraph. Throws std::invalid_argument for
/// k < 3, g < 3, or T1 with m < 2g.
TheoremReport verify_theorem(TheoremId id, int k, int m, int g, int d_max, const MomentOptions& options = {},
                             const ParallelFor& executor = serial_executor(), EnumerationLimits limits = {});

}  // namespace hgm
