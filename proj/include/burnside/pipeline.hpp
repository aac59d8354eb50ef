#pragma once

#include <string>
#include <vector>

#include "burnside/formats.hpp"
#include "burnside/galois.hpp"
#include "burnside/group.hpp"
#include "burnside/marks.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

/// Everything computed from a group: classes, marks, both partition
/// methods, and the invariant (from the marks partitions).
struct GroupAnalysis {
  FiniteGroup group;
  ClassTable classes;
  TableOfMarks tom;
  PartitionMap marks_partitions;
  PartitionMap structural_partitions;
  GaloisInvariant invariant;

  /// Primes at which the two cyclic-extension methods disagree.
  std::vector<std::uint64_t> method_disagreements() const;
};

GroupAnalysis analyze_group(const GroupSpec& spec, std::size_t cap = default_order_cap());

/// Runs the gluing loop on a table alone, with marks-congruence partitions.
GaloisInvariant analyze_table(const TableOfMarks& tom);

struct CatalogEntry {
  std::string spec;
  std::uint64_t order;
};

/// Built-in groups exercised by the self-check, in increasing order.
std::vector<CatalogEntry> builtin_catalog();

}  // namespace burnside
