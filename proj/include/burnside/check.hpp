#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnside/pipeline.hpp"

namespace burnside {

struct CheckFailure {
  std::string group;
  std::string invariant;
  std::string detail;
};

struct CheckRow {
  std::string group;
  std::uint64_t order = 0;
  std::size_t classes = 0;
  bool solvable = false;
  std::vector<Rank> ranks;
  bool ok = true;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Components as a set of sorted blocks, for order-free comparison.
std::vector<Block> normalized_components(const std::vector<Block>& components);

/// Invariants of one analyzed group; returns the failures.
std::vector<CheckFailure> check_analysis(const std::string& name, const GroupSpec& spec,
                                         const GroupAnalysis& analysis);

/// Runs check_analysis over every catalog group of order <= max_order.
CheckReport run_checks(std::uint64_t max_order);

std::string format_report(const CheckReport& report);

}  // namespace burnside
