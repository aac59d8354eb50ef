#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "burnside/marks.hpp"

namespace burnside {

using Rank = std::int64_t;
using Block = std::vector<std::size_t>;

/// One pass of the gluing loop: class `index` is attached to the
/// components built so far. The first record of a trace attaches the
/// whole group to the empty space.
struct StepRecord {
  std::size_t index = 0;
  Mark diagonal = 0;
  std::vector<std::uint64_t> primes;
  /// For each prime, the cyclic-extension block containing `index`.
  std::vector<Block> prime_blocks;
  /// Existing components met by those blocks, in discovery order.
  std::vector<Block> glued;
  /// Rank of the newly formed component.
  Rank rank = 0;
  std::vector<Rank> ranks_after;
  std::vector<Block> components_after;
  std::int64_t chi_before = 0;
  std::int64_t chi_after = 0;
};

/// Ranks of the free profinite groups, one per connected component.
struct GaloisInvariant {
  /// Ranks in the order the loop leaves them, aligned with `components`.
  std::vector<Rank> ranks;
  std::vector<Block> components;
  std::vector<StepRecord> trace;

  /// Ranks sorted descending.
  std::vector<Rank> canonical_ranks() const;
  std::int64_t chi() const;
};

/// Walks the classes from the whole group down to the trivial subgroup,
/// gluing each new copy of Spec Z to the current components along the
/// cyclic-extension blocks of the primes dividing its Weyl group order.
///
/// `partitions` must hold a partition for every prime dividing the group
/// order. Throws InputError on missing or mis-sized partitions, or when a
/// class has a subconjugate class at a larger index; throws
/// std::logic_error if a step breaks chi additivity.
GaloisInvariant compute_galois_invariant(const TableOfMarks& tom, const PartitionMap& partitions);

/// Sum over proper classes of (number of primes dividing the Weyl order) - 1.
/// Equals the single rank when the group is solvable.
Rank solvable_rank_formula(const TableOfMarks& tom);

/// For N = prod p_i^a_i: sum over exponent vectors b != a with 0 <= b_i <= a_i
/// of (#{i : b_i < a_i} - 1). The rank for the cyclic group of order N.
Rank divisor_rank_formula(std::uint64_t n);

/// Number of components minus the sum of ranks.
std::int64_t euler_characteristic(std::span<const Rank> ranks);

}  // namespace burnside
