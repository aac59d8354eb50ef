#include "burnside/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "burnside/error.hpp"

namespace burnside {

std::size_t default_order_cap()
{
  const char* env = std::getenv("BURNSIDE_ORDER_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    throw InputError(std::string("invalid BURNSIDE_ORDER_CAP value '") + env + "'");
  }
  return static_cast<std::size_t>(std::min<unsigned long long>(value, kHardOrderCap));
}

// ---------------------------------------------------------------------------
// ElementSet

std::size_t ElementSet::count() const noexcept
{
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept
{
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept
{
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other)
{
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other)
{
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Element> ElementSet::members() const
{
  std::vector<Element> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

bool member_order_less(const ElementSet& a, const ElementSet& b)
{
  // The first differing bit decides: whoever holds it has the smaller
  // member there.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    auto diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    auto bit = diff & (~diff + 1);
    return (a.words_[i] & bit) != 0;
  }
  return false;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept
{
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// FiniteGroup

std::optional<Element> FiniteGroup::index_of(const Permutation& p) const
{
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet FiniteGroup::full_set() const
{
  ElementSet s(order());
  for (Element e = 0; e < order(); ++e) s.insert(e);
  return s;
}

ElementSet FiniteGroup::trivial_set() const
{
  ElementSet s(order());
  s.insert(identity());
  return s;
}

ElementSet FiniteGroup::conjugate(const ElementSet& subset, Element g) const
{
  ElementSet out(order());
  Element g_inv = inverse(g);
  for (auto h : subset.members()) out.insert(multiply(multiply(g_inv, h), g));
  return out;
}

ElementSet FiniteGroup::closure(std::span<const Element> gens) const
{
  return closure(trivial_set(), {}, gens);
}

ElementSet FiniteGroup::closure(const ElementSet& base, std::span<const Element> base_gens,
                                std::span<const Element> extra) const
{
  // Dimino: the group is kept as a union of right cosets H r of the
  // previous stage H, and is closed under right multiplication by every
  // generator seen so far.
  ElementSet current = base;
  std::vector<Element> elements = base.members();
  std::vector<Element> gens(base_gens.begin(), base_gens.end());

  for (auto g : extra) {
    gens.push_back(g);
    if (current.contains(g)) continue;
    const std::vector<Element> previous = elements;
    std::vector<Element> reps{identity()};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (auto s : gens) {
        Element x = multiply(reps[r], s);
        if (current.contains(x)) continue;
        for (auto h : previous) {
          Element y = multiply(h, x);
          current.insert(y);
          elements.push_back(y);
        }
        reps.push_back(x);
      }
    }
  }
  return current;
}

bool FiniteGroup::is_subgroup(const ElementSet& subset) const
{
  if (!subset.contains(identity())) return false;
  auto members = subset.members();
  for (auto a : members) {
    for (auto b : members) {
      if (!subset.contains(multiply(a, b))) return false;
    }
  }
  return true;
}

FiniteGroup generate_group(std::span<const Permutation> gens, std::size_t cap)
{
  if (gens.empty()) {
    throw InputError("cannot generate a group from an empty generator list");
  }
  cap = std::min(cap, kHardOrderCap);
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InputError("generators have different degrees");
  }

  std::unordered_set<Permutation> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : gens) {
      auto next = queue[head] * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw ResourceError("group order exceeds the cap of " + std::to_string(cap) +
                              " (set BURNSIDE_ORDER_CAP, at most " +
                              std::to_string(kHardOrderCap) + ")");
        }
        queue.push_back(std::move(next));
      }
    }
  }

  FiniteGroup group;
  group.degree_ = degree;
  group.generators_.assign(gens.begin(), gens.end());
  group.elements_ = std::move(queue);
  std::sort(group.elements_.begin(), group.elements_.end());

  const std::size_t n = group.elements_.size();
  group.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    group.index_.emplace(group.elements_[i], static_cast<Element>(i));
  }
  group.table_.resize(n * n);
  group.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto product = group.index_.at(group.elements_[a] * group.elements_[b]);
      group.table_[a * n + b] = static_cast<std::uint16_t>(product);
      if (product == 0) group.inverses_[a] = static_cast<Element>(b);
    }
  }
  return group;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f = saturating_mul(f, k);
  return f;
}

bool is_small_prime(std::size_t p)
{
  return p == 2 || p == 3 || p == 5 || p == 7;
}

Permutation cycle_on(std::size_t degree, Point first, Point last)
{
  std::vector<Point> cycle;
  for (Point x = first; x <= last; ++x) cycle.push_back(x);
  return Permutation::from_cycles(degree, {cycle});
}

std::vector<Permutation> builtin_generators(const GroupSpec& spec, std::size_t cap);

struct GeneratorVisitor {
  std::size_t cap;

  std::vector<Permutation> operator()(const Cyclic& c) const
  {
    if (c.n == 1) return {Permutation::identity(1)};
    return {cycle_on(c.n, 1, static_cast<Point>(c.n))};
  }

  std::vector<Permutation> operator()(const Symmetric& s) const
  {
    if (s.n == 1) return {Permutation::identity(1)};
    if (s.n == 2) return {cycle_on(2, 1, 2)};
    return {cycle_on(s.n, 1, 2), cycle_on(s.n, 1, static_cast<Point>(s.n))};
  }

  std::vector<Permutation> operator()(const Alternating& a) const
  {
    if (a.n <= 2) return {Permutation::identity(std::max<std::size_t>(a.n, 1))};
    if (a.n == 3) return {cycle_on(3, 1, 3)};
    auto n = static_cast<Point>(a.n);
    return {cycle_on(a.n, 1, 3), a.n % 2 == 1 ? cycle_on(a.n, 1, n) : cycle_on(a.n, 2, n)};
  }

  std::vector<Permutation> operator()(const Dihedral& d) const
  {
    const std::size_t m = d.order / 2;
    if (m == 1) return {cycle_on(2, 1, 2)};
    if (m == 2) return {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), cycle_on(4, 1, 2)};
    // Rotation, and the reflection fixing point 1.
    std::vector<std::vector<Point>> reflection;
    for (Point i = 2; i < static_cast<Point>(m) + 2 - i; ++i) {
      reflection.push_back({i, static_cast<Point>(m) + 2 - i});
    }
    return {cycle_on(m, 1, static_cast<Point>(m)), Permutation::from_cycles(m, reflection)};
  }

  std::vector<Permutation> operator()(const Quaternion8&) const
  {
    // Left-regular action on the units +-1, +-i, +-j, +-k. Unit u is
    // (sign << 2) | basis with basis 0..3 = 1, i, j, k.
    static constexpr int kBasisProduct[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr bool kBasisNegates[4][4] = {
        {false, false, false, false},
        {false, true, false, true},
        {false, true, true, false},
        {false, false, true, true}};
    auto left_multiplication = [](int unit) {
      std::vector<Point> images(8);
      for (int x = 0; x < 8; ++x) {
        int a = unit & 3, b = x & 3;
        bool negative = ((unit >> 2) ^ (x >> 2) ^ kBasisNegates[a][b]) & 1;
        images[x] = static_cast<Point>((negative ? 4 : 0) | kBasisProduct[a][b]);
      }
      return Permutation(std::move(images));
    };
    return {left_multiplication(1), left_multiplication(2)};
  }

  std::vector<Permutation> operator()(const SL2& s) const
  {
    const std::size_t p = s.p;
    // Nonzero vector (a, b) is point a*p + b (1-based, since (0,0) is skipped).
    auto matrix_action = [p](std::size_t m00, std::size_t m01, std::size_t m10, std::size_t m11) {
      std::vector<Point> images(p * p - 1);
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
          if (a == 0 && b == 0) continue;
          std::size_t x = (m00 * a + m01 * b) % p;
          std::size_t y = (m10 * a + m11 * b) % p;
          images[a * p + b - 1] = static_cast<Point>(x * p + y);
        }
      }
      return Permutation::from_one_based(images);
    };
    return {matrix_action(1, 1, 0, 1), matrix_action(0, p - 1, 1, 0)};
  }

  std::vector<Permutation> operator()(const FromGenerators& f) const { return f.gens; }

  std::vector<Permutation> operator()(const GeneratorFile& f) const
  {
    std::ifstream in(f.path);
    if (!in) throw InputError("cannot read generator file '" + f.path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_generator_file(buffer.str());
  }

  std::vector<Permutation> operator()(const std::vector<GroupSpec>& factors) const
  {
    std::vector<std::vector<Permutation>> parts;
    std::size_t degree = 0;
    for (const auto& f : factors) {
      parts.push_back(builtin_generators(f, cap));
      degree += parts.back().front().degree();
    }
    std::vector<Permutation> gens;
    std::size_t offset = 0;
    for (const auto& part : parts) {
      const std::size_t d = part.front().degree();
      for (const auto& g : part) {
        std::vector<Point> images(degree);
        for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(x);
        for (std::size_t x = 0; x < d; ++x) images[offset + x] = static_cast<Point>(offset + g(static_cast<Point>(x)));
        gens.emplace_back(std::move(images));
      }
      offset += d;
    }
    return gens;
  }
};

void validate(const GroupSpec& spec)
{
  std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cyclic> || std::is_same_v<T, Symmetric> ||
                      std::is_same_v<T, Alternating>) {
          if (k.n == 0) throw InputError("group parameter must be at least 1");
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          if (k.order == 0 || k.order % 2 != 0) {
            throw InputError("dihedral order must be a positive even number, got " +
                             std::to_string(k.order));
          }
        } else if constexpr (std::is_same_v<T, SL2>) {
          if (!is_small_prime(k.p)) {
            throw InputError("SL2 is supported over prime fields F_p with p <= 7, got p = " +
                             std::to_string(k.p));
          }
        } else if constexpr (std::is_same_v<T, FromGenerators>) {
          if (k.gens.empty()) throw InputError("empty generator list");
        } else if constexpr (std::is_same_v<T, std::vector<GroupSpec>>) {
          if (k.empty()) throw InputError("direct product needs at least one factor");
          for (const auto& f : k) validate(f);
        }
      },
      spec.kind);
}

std::vector<Permutation> builtin_generators(const GroupSpec& spec, std::size_t cap)
{
  return std::visit(GeneratorVisitor{cap}, spec.kind);
}

}  // namespace

std::optional<std::uint64_t> expected_order(const GroupSpec& spec)
{
  return std::visit(
      [](const auto& k) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return k.n;
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return factorial(k.n);
        } else if constexpr (std::is_same_v<T, Alternating>) {
          return k.n <= 1 ? 1 : factorial(k.n) / 2;
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          return k.order;
        } else if constexpr (std::is_same_v<T, Quaternion8>) {
          return 8;
        } else if constexpr (std::is_same_v<T, SL2>) {
          return k.p * (k.p * k.p - 1);
        } else if constexpr (std::is_same_v<T, std::vector<GroupSpec>>) {
          std::uint64_t total = 1;
          for (const auto& f : k) {
            auto o = expected_order(f);
            if (!o) return std::nullopt;
            total = saturating_mul(total, *o);
          }
          return total;
        } else {
          return std::nullopt;
        }
      },
      spec.kind);
}

FiniteGroup make_group(const GroupSpec& spec, std::size_t cap)
{
  validate(spec);
  cap = std::min(cap, kHardOrderCap);
  if (auto order = expected_order(spec); order && *order > cap) {
    throw ResourceError("group order " +
                        (*order == kSaturated ? std::string("(overflow)") : std::to_string(*order)) +
                        " exceeds the cap of " + std::to_string(cap));
  }
  auto gens = builtin_generators(spec, cap);
  return generate_group(gens, cap);
}

// ---------------------------------------------------------------------------
// Derived series

ElementSet derived_subgroup(const FiniteGroup& g, const ElementSet& subgroup)
{
  auto members = subgroup.members();
  ElementSet commutators(g.order());
  for (auto a : members) {
    for (auto b : members) {
      auto ab = g.multiply(a, b);
      auto ba = g.multiply(b, a);
      commutators.insert(g.multiply(g.inverse(ba), ab));
    }
  }
  auto gens = commutators.members();
  return g.closure(gens);
}

ElementSet derived_subgroup(const FiniteGroup& g)
{
  return derived_subgroup(g, g.full_set());
}

bool is_solvable(const FiniteGroup& g)
{
  auto current = g.full_set();
  for (;;) {
    auto next = derived_subgroup(g, current);
    if (next == current) return current.count() == 1;
    current = std::move(next);
  }
}

}  // namespace burnside
