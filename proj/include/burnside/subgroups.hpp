#pragma once

#include <cstddef>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// One conjugacy class of subgroups.
struct SubgroupClass {
  ElementSet representative;
  std::size_t order = 0;
  /// Every conjugate of the representative, in member order.
  std::vector<ElementSet> conjugates;
  ElementSet normalizer;
  std::size_t normalizer_order = 0;
  /// |N_G(H) / H|.
  std::size_t weyl_order = 0;
};

/// Conjugacy classes of subgroups, ordered by subgroup order; ties are
/// broken by the representative, which is the least conjugate in member
/// order. The trivial subgroup comes first and the whole group last.
class ClassTable {
 public:
  ClassTable(std::size_t group_order, std::vector<SubgroupClass> classes)
      : group_order_(group_order), classes_(std::move(classes))
  {}

  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t group_order() const noexcept { return group_order_; }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }

 private:
  std::size_t group_order_;
  std::vector<SubgroupClass> classes_;
};

/// Every subgroup of g exactly once, sorted by order then member order.
/// Found by join closure: starting from the cyclic subgroups, <H, c> is
/// formed for known H and cyclic c until nothing new appears.
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

ClassTable conjugacy_classes_of_subgroups(const FiniteGroup& g);

/// True iff some conjugate of class j lies inside the representative of
/// class i.
bool is_subconjugate(const ClassTable& table, std::size_t j, std::size_t i);

}  // namespace burnside
