#include "burnside/subgroups.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace burnside {

namespace {

struct PendingClass {
  ElementSet representative;
  std::vector<Element> generators;
  std::vector<ElementSet> conjugates;
};

std::vector<ElementSet> conjugates_of(const FiniteGroup& g, const ElementSet& h)
{
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out;
  for (Element x = 0; x < g.order(); ++x) {
    auto c = g.conjugate(h, x);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

// Join closure, one work item per conjugacy class: if M is known and
// g M g^-1 = R is the class representative, then g <M, c> g^-1 = <R, g c g^-1>,
// so joining representatives with every cyclic subgroup reaches every class.
std::vector<PendingClass> enumerate_classes(const FiniteGroup& g)
{
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> known;
  std::vector<PendingClass> classes;

  auto record = [&](ElementSet subgroup, std::vector<Element> gens) {
    if (known.contains(subgroup)) return;
    auto conjugates = conjugates_of(g, subgroup);
    for (const auto& c : conjugates) known.emplace(c, classes.size());
    classes.push_back({std::move(subgroup), std::move(gens), std::move(conjugates)});
  };

  record(g.trivial_set(), {});

  // Cyclic subgroups, one generator each.
  std::vector<Element> cyclic_generators;
  std::unordered_set<ElementSet, ElementSetHash> cyclic;
  for (Element x = 1; x < g.order(); ++x) {
    const Element gens[] = {x};
    auto c = g.closure(gens);
    if (cyclic.insert(c).second) {
      cyclic_generators.push_back(x);
      record(std::move(c), {x});
    }
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (auto x : cyclic_generators) {
      if (classes[i].representative.contains(x)) continue;
      const Element extra[] = {x};
      auto joined = g.closure(classes[i].representative, classes[i].generators, extra);
      if (known.contains(joined)) continue;
      auto gens = classes[i].generators;
      gens.push_back(x);
      record(std::move(joined), std::move(gens));
    }
  }
  return classes;
}

}  // namespace

ClassTable conjugacy_classes_of_subgroups(const FiniteGroup& g)
{
  auto pending = enumerate_classes(g);
  std::vector<SubgroupClass> classes;
  classes.reserve(pending.size());
  for (auto& p : pending) {
    SubgroupClass c;
    std::sort(p.conjugates.begin(), p.conjugates.end(), member_order_less);
    c.conjugates = std::move(p.conjugates);
    c.representative = c.conjugates.front();
    c.order = c.representative.count();
    c.normalizer_order = g.order() / c.conjugates.size();
    c.weyl_order = c.normalizer_order / c.order;
    c.normalizer = ElementSet(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      if (g.conjugate(c.representative, x) == c.representative) c.normalizer.insert(x);
    }
    if (c.normalizer.count() != c.normalizer_order) {
      throw std::logic_error("normalizer order disagrees with class size");
    }
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return member_order_less(a.representative, b.representative);
  });
  return ClassTable(g.order(), std::move(classes));
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g)
{
  std::vector<ElementSet> out;
  for (auto& c : enumerate_classes(g)) {
    for (auto& s : c.conjugates) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    auto na = a.count(), nb = b.count();
    if (na != nb) return na < nb;
    return member_order_less(a, b);
  });
  return out;
}

bool is_subconjugate(const ClassTable& table, std::size_t j, std::size_t i)
{
  const auto& small = table[j];
  const auto& big = table[i];
  if (big.order % small.order != 0) return false;
  return std::any_of(small.conjugates.begin(), small.conjugates.end(),
                     [&](const ElementSet& c) { return c.is_subset_of(big.representative); });
}

}  // namespace burnside
