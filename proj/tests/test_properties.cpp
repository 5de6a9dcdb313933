#include "properties.hpp"

#include <doctest.h>

namespace {

void require_clean(const property::Tally& tally, int minimum) {
  INFO(tally.first_failure);
  CHECK(tally.checked >= minimum);
  CHECK(tally.failed == 0);
}

}  // namespace

TEST_CASE("canonical forms survive relabeling") { require_clean(property::relabeling_invariance(150, 101), 100); }

TEST_CASE("base constructors give linear bicyclic hypergraphs of the right order") {
  require_clean(property::constructor_invariants(), 50);
}

TEST_CASE("pendant path moves keep degree bookkeeping") { require_clean(property::move_bookkeeping(), 50); }

TEST_CASE("grouped moments equal the literal tuple sum") { require_clean(property::grouped_vs_literal(), 40); }
