#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/subgroups.hpp"

namespace burnside {

using Mark = std::int64_t;

/// Table of marks: entry (i, j) is the number of fixed points of a
/// subgroup in class j acting on G / H_i. Classes are ordered so that the
/// table is lower triangular, the trivial subgroup first and G last.
class TableOfMarks {
 public:
  /// Validates everything checkable without the group: ragged lower
  /// triangular shape, non-negative entries, positive diagonal dividing the
  /// first column, first column non-increasing and dividing |G|, entries
  /// bounded by the first column, last row all ones, and class orders (when
  /// given) consistent with the first column. Throws InputError.
  static TableOfMarks from_lower_rows(std::vector<std::vector<Mark>> rows,
                                      std::optional<std::string> name = std::nullopt,
                                      std::optional<std::vector<Mark>> class_orders = std::nullopt);

  std::size_t size() const noexcept { return rows_.size(); }
  Mark operator()(std::size_t i, std::size_t j) const { return j <= i ? rows_[i][j] : 0; }
  Mark group_order() const { return rows_[0][0]; }
  Mark weyl_order(std::size_t i) const { return rows_[i][i]; }
  std::vector<Mark> diagonal() const;

  const std::vector<std::vector<Mark>>& lower_rows() const noexcept { return rows_; }
  const std::optional<std::string>& name() const noexcept { return name_; }
  void set_name(std::optional<std::string> name) { name_ = std::move(name); }
  const std::optional<std::vector<Mark>>& class_orders() const noexcept { return class_orders_; }

  friend bool operator==(const TableOfMarks&, const TableOfMarks&) = default;

 private:
  TableOfMarks() = default;

  std::vector<std::vector<Mark>> rows_;
  std::optional<std::string> name_;
  std::optional<std::vector<Mark>> class_orders_;
};

/// A partition of class indices {0..s-1}. Blocks are sorted internally
/// and ordered by their least element.
struct PrimePartition {
  std::uint64_t prime = 0;
  std::vector<std::vector<std::size_t>> blocks;

  /// Normalizes block order; throws InputError unless the blocks cover
  /// {0..size-1} exactly once.
  static PrimePartition from_blocks(std::uint64_t prime,
                                    std::vector<std::vector<std::size_t>> blocks,
                                    std::size_t size);

  const std::vector<std::size_t>& block_containing(std::size_t i) const;

  friend bool operator==(const PrimePartition&, const PrimePartition&) = default;
};

using PartitionMap = std::map<std::uint64_t, PrimePartition>;

TableOfMarks table_of_marks(const FiniteGroup& g, const ClassTable& classes);

/// Columns j, j' share a block iff they agree modulo p in every row.
/// Throws InputError when p is not prime.
PrimePartition cyclic_extensions_marks(const TableOfMarks& tom, std::uint64_t p);

/// Equivalence generated by H normal in K with [K : H] = p, for some
/// conjugates of the two classes. Independent of the marks.
PrimePartition cyclic_extensions_structural(const FiniteGroup& g, const ClassTable& classes,
                                            std::uint64_t p);

/// cyclic_extensions_marks for every prime dividing the group order.
PartitionMap cyclic_extensions_marks_all(const TableOfMarks& tom);

/// cyclic_extensions_structural for every prime dividing the group order.
PartitionMap cyclic_extensions_structural_all(const FiniteGroup& g, const ClassTable& classes);

bool is_prime(std::uint64_t n);

/// Ascending distinct prime divisors; empty for 1. Throws InputError for 0.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace burnside
