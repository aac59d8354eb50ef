#pragma once

// Brute-force references used only by the tests. None of these go through
// the join closure, the conjugate-counting mark formula or the odometer in
// the divisor formula.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/marks.hpp"
#include "burnside/subgroups.hpp"

namespace oracle {

using burnside::Element;
using burnside::ElementSet;
using burnside::FiniteGroup;

/// Every subset of size dividing |G| that contains the identity and is
/// closed under multiplication. Feasible up to order ~24.
inline std::vector<ElementSet> subgroups_by_subsets(const FiniteGroup& g)
{
  const std::size_t n = g.order();
  std::vector<ElementSet> found;
  std::vector<Element> chosen{FiniteGroup::identity()};
  std::function<void(Element, std::size_t)> extend = [&](Element next, std::size_t target) {
    if (chosen.size() == target) {
      for (auto a : chosen) {
        for (auto b : chosen) {
          if (!std::binary_search(chosen.begin(), chosen.end(), g.multiply(a, b))) return;
        }
      }
      ElementSet s(n);
      for (auto a : chosen) s.insert(a);
      found.push_back(s);
      return;
    }
    for (Element e = next; e < n; ++e) {
      if (n - e < target - chosen.size()) break;
      chosen.push_back(e);
      extend(e + 1, target);
      chosen.pop_back();
    }
  };
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) extend(1, d);
  }
  return found;
}

/// m(i, j) = |{g : g^-1 K_j g <= H_i}| / |H_i|, looping over all of G.
inline burnside::Mark literal_mark(const FiniteGroup& g, const burnside::ClassTable& classes,
                                   std::size_t i, std::size_t j)
{
  const auto& h = classes[i].representative;
  const auto& k = classes[j].representative;
  std::size_t fixing = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.conjugate(k, x).is_subset_of(h)) ++fixing;
  }
  return static_cast<burnside::Mark>(fixing / classes[i].order);
}

/// Exponent vectors b correspond to divisors d of N; the number of i with
/// b_i < a_i is the number of primes dividing N / d.
inline std::int64_t divisor_rank_by_divisors(std::uint64_t n)
{
  auto omega = [](std::uint64_t m) {
    std::int64_t count = 0;
    for (std::uint64_t p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      ++count;
      while (m % p == 0) m /= p;
    }
    return count;
  };
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) total += omega(n / d) - 1;
  }
  return total;
}

}  // namespace oracle
