#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "burnside/permutation.hpp"

namespace burnside {

/// Index of an element in the canonical enumeration of a FiniteGroup.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 1000;
inline constexpr std::size_t kHardOrderCap = 5040;

/// Order cap from BURNSIDE_ORDER_CAP, else kDefaultOrderCap; never above
/// kHardOrderCap. Throws InputError on a malformed value.
std::size_t default_order_cap();

/// A subset of the elements of an ambient group, stored as a bit-vector
/// over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);

  /// Members in increasing index order.
  std::vector<Element> members() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Decided by the smallest element in the symmetric difference: the set
  /// containing it is smaller. For sets of equal size this is the
  /// lexicographic order of the sorted member lists.
  friend bool member_order_less(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

bool member_order_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

/// A fully enumerated permutation group. Elements are sorted
/// lexicographically by image sequence, so the identity has index 0.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(Element e) const { return elements_[e]; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::optional<Element> index_of(const Permutation& p) const;

  static constexpr Element identity() noexcept { return 0; }

  /// Product with the same convention as compose: (a*b)(x) = a(b(x)).
  Element multiply(Element a, Element b) const
  {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  Element inverse(Element a) const { return inverses_[a]; }

  ElementSet full_set() const;
  ElementSet trivial_set() const;

  /// {g^-1 h g : h in subset}.
  ElementSet conjugate(const ElementSet& subset, Element g) const;

  /// The subgroup generated by `gens`.
  ElementSet closure(std::span<const Element> gens) const;

  /// Extends the subgroup `base` by `extra` generators.
  ElementSet closure(const ElementSet& base, std::span<const Element> base_gens,
                     std::span<const Element> extra) const;

  bool is_subgroup(const ElementSet& subset) const;

 private:
  friend FiniteGroup generate_group(std::span<const Permutation> gens, std::size_t cap);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, Element> index_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverses_;
};

/// Closes `gens` under composition. Throws InputError for an empty list or
/// mixed degrees, ResourceError once more than `cap` elements appear.
FiniteGroup generate_group(std::span<const Permutation> gens,
                           std::size_t cap = default_order_cap());

struct Cyclic {
  std::size_t n;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};
struct Symmetric {
  std::size_t n;
  friend bool operator==(const Symmetric&, const Symmetric&) = default;
};
struct Alternating {
  std::size_t n;
  friend bool operator==(const Alternating&, const Alternating&) = default;
};
/// Dihedral group of the given order (2m), acting on m points.
struct Dihedral {
  std::size_t order;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};
struct Quaternion8 {
  friend bool operator==(const Quaternion8&, const Quaternion8&) = default;
};
/// SL(2, p) acting on the p^2 - 1 nonzero vectors of the plane over F_p.
struct SL2 {
  std::size_t p;
  friend bool operator==(const SL2&, const SL2&) = default;
};
struct FromGenerators {
  std::vector<Permutation> gens;
  friend bool operator==(const FromGenerators&, const FromGenerators&) = default;
};
struct GeneratorFile {
  std::string path;
  friend bool operator==(const GeneratorFile&, const GeneratorFile&) = default;
};

/// A group description. The vector alternative is a direct product of
/// its factors.
struct GroupSpec {
  std::variant<Cyclic, Symmetric, Alternating, Dihedral, Quaternion8, SL2, FromGenerators,
               GeneratorFile, std::vector<GroupSpec>>
      kind;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Group order implied by a spec, when it is known without enumeration.
std::optional<std::uint64_t> expected_order(const GroupSpec& spec);

/// Builds the permutation group described by `spec`. Known orders are
/// checked against `cap` before any enumeration.
FiniteGroup make_group(const GroupSpec& spec, std::size_t cap = default_order_cap());

ElementSet derived_subgroup(const FiniteGroup& g, const ElementSet& subgroup);
ElementSet derived_subgroup(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

}  // namespace burnside
