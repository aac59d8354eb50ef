#include "burnside/galois.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "burnside/error.hpp"

namespace burnside {

namespace {

// Returns the partitions for the primes of |G|, normalized.
PartitionMap check_inputs(const TableOfMarks& tom, const PartitionMap& partitions)
{
  const std::size_t s = tom.size();
  PartitionMap normalized;
  for (auto p : prime_divisors(static_cast<std::uint64_t>(tom.group_order()))) {
    auto it = partitions.find(p);
    if (it == partitions.end()) {
      throw InputError("no cyclic-extension partition supplied for prime " + std::to_string(p));
    }
    normalized.emplace(p, PrimePartition::from_blocks(p, it->second.blocks, s));
  }
  // A subgroup of H_i has index divisible by [G : H_i]; a nonzero mark
  // whose column index is not such a multiple means the rows are not in
  // subgroup order.
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (tom(i, j) != 0 && tom(j, 0) % tom(i, 0) != 0) {
        throw InputError("class order violated: class " + std::to_string(j + 1) +
                         " is marked inside class " + std::to_string(i + 1) +
                         " but its index is not a multiple");
      }
    }
  }
  return normalized;
}

std::int64_t chi_of(const std::vector<Rank>& ranks)
{
  return euler_characteristic(ranks);
}

}  // namespace

std::vector<Rank> GaloisInvariant::canonical_ranks() const
{
  auto sorted = ranks;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

std::int64_t GaloisInvariant::chi() const
{
  return euler_characteristic(ranks);
}

GaloisInvariant compute_galois_invariant(const TableOfMarks& tom, const PartitionMap& supplied)
{
  const PartitionMap partitions = check_inputs(tom, supplied);
  const std::size_t s = tom.size();

  GaloisInvariant result;
  std::vector<Rank>& ranks = result.ranks;
  std::vector<Block>& components = result.components;

  // The whole group: its Weyl group is trivial, so it starts an isolated
  // component of rank 0.
  ranks = {0};
  components = {{s - 1}};
  {
    StepRecord init;
    init.index = s - 1;
    init.diagonal = tom.weyl_order(s - 1);
    init.ranks_after = ranks;
    init.components_after = components;
    init.chi_before = 0;
    init.chi_after = chi_of(ranks);
    result.trace.push_back(std::move(init));
  }

  for (std::size_t c = s - 1; c > 0; --c) {
    const std::size_t k = c - 1;
    StepRecord step;
    step.index = k;
    step.diagonal = tom.weyl_order(k);
    step.primes = prime_divisors(static_cast<std::uint64_t>(step.diagonal));
    step.chi_before = chi_of(ranks);

    if (step.primes.empty()) {
      ranks.insert(ranks.begin(), 0);
      components.insert(components.begin(), Block{k});
    } else {
      std::vector<bool> in_glued(components.size(), false);
      for (auto p : step.primes) {
        const auto& block = partitions.at(p).block_containing(k);
        step.prime_blocks.push_back(block);
        for (std::size_t j = 0; j < components.size(); ++j) {
          if (in_glued[j]) continue;
          bool meets = std::any_of(components[j].begin(), components[j].end(), [&](auto x) {
            return std::binary_search(block.begin(), block.end(), x);
          });
          if (meets) {
            in_glued[j] = true;
            step.glued.push_back(components[j]);
          }
        }
      }

      Rank glued_sum = 0;
      std::vector<Rank> kept_ranks;
      std::vector<Block> kept_components;
      for (std::size_t j = 0; j < components.size(); ++j) {
        if (in_glued[j]) {
          glued_sum += ranks[j];
        } else {
          kept_ranks.push_back(ranks[j]);
          kept_components.push_back(std::move(components[j]));
        }
      }
      step.rank = static_cast<Rank>(step.primes.size()) - static_cast<Rank>(step.glued.size()) +
                  glued_sum;

      Block merged{k};
      for (const auto& b : step.glued) merged.insert(merged.end(), b.begin(), b.end());

      ranks.clear();
      ranks.push_back(step.rank);
      ranks.insert(ranks.end(), kept_ranks.begin(), kept_ranks.end());
      components.clear();
      components.push_back(std::move(merged));
      for (auto& b : kept_components) components.push_back(std::move(b));
    }

    step.chi_after = chi_of(ranks);
    if (step.chi_after != step.chi_before + 1 - static_cast<std::int64_t>(step.primes.size())) {
      throw std::logic_error("chi additivity failed at class " + std::to_string(k + 1));
    }
    step.ranks_after = ranks;
    step.components_after = components;
    result.trace.push_back(std::move(step));
  }
  return result;
}

Rank solvable_rank_formula(const TableOfMarks& tom)
{
  Rank total = 0;
  for (std::size_t i = 0; i + 1 < tom.size(); ++i) {
    total += static_cast<Rank>(prime_divisors(static_cast<std::uint64_t>(tom.weyl_order(i))).size()) - 1;
  }
  return total;
}

Rank divisor_rank_formula(std::uint64_t n)
{
  if (n == 0) throw InputError("divisor formula needs a positive integer");
  std::vector<unsigned> exponents;
  for (auto p : prime_divisors(n)) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    exponents.push_back(a);
  }
  // Odometer over all exponent vectors b with 0 <= b_i <= a_i.
  std::vector<unsigned> b(exponents.size(), 0);
  Rank total = 0;
  for (;;) {
    Rank below = 0;
    for (std::size_t i = 0; i < b.size(); ++i) below += b[i] < exponents[i] ? 1 : 0;
    if (below > 0) total += below - 1;
    std::size_t i = 0;
    while (i < b.size() && b[i] == exponents[i]) b[i++] = 0;
    if (i == b.size()) break;
    ++b[i];
  }
  return total;
}

std::int64_t euler_characteristic(std::span<const Rank> ranks)
{
  return static_cast<std::int64_t>(ranks.size()) -
         std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
}

}  // namespace burnside
