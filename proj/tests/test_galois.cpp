#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "burnside/check.hpp"
#include "burnside/error.hpp"
#include "burnside/formats.hpp"
#include "burnside/galois.hpp"
#include "burnside/pipeline.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

using Rows = std::vector<std::vector<Mark>>;

std::vector<Block> zero_based(std::vector<Block> blocks)
{
  for (auto& b : blocks) {
    for (auto& x : b) --x;
  }
  return blocks;
}

PartitionMap partitions(std::size_t s, std::map<std::uint64_t, std::vector<Block>> one_based)
{
  PartitionMap out;
  for (auto& [p, blocks] : one_based) {
    out.emplace(p, PrimePartition::from_blocks(p, zero_based(blocks), s));
  }
  return out;
}

struct Snapshot {
  std::vector<Rank> ranks;
  std::vector<Block> components;
};

void check_trace(const GaloisInvariant& inv, const std::vector<Snapshot>& expected)
{
  REQUIRE(inv.trace.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(inv.trace[i].ranks_after == expected[i].ranks);
    CHECK(inv.trace[i].components_after == zero_based(expected[i].components));
  }
}

const Rows kC6 = {{6}, {3, 3}, {2, 0, 2}, {1, 1, 1, 1}};
const Rows kS3 = {{6}, {3, 1}, {2, 0, 2}, {1, 1, 1, 1}};
const Rows kA5 = {{60},
                  {30, 2},
                  {20, 0, 2},
                  {15, 3, 0, 3},
                  {12, 0, 0, 0, 2},
                  {10, 2, 1, 0, 0, 1},
                  {6, 2, 0, 0, 1, 0, 1},
                  {5, 1, 2, 1, 0, 0, 0, 1},
                  {1, 1, 1, 1, 1, 1, 1, 1, 1}};

TableOfMarks permuted(const TableOfMarks& tom, const std::vector<std::size_t>& order)
{
  Rows rows(tom.size());
  for (std::size_t i = 0; i < tom.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) rows[i].push_back(tom(order[i], order[j]));
  }
  return TableOfMarks::from_lower_rows(std::move(rows));
}

}  // namespace

TEST_CASE("C6 walkthrough")
{
  auto tom = TableOfMarks::from_lower_rows(kC6);
  auto inv = compute_galois_invariant(tom, partitions(4, {{2, {{1, 2}, {3, 4}}},
                                                          {3, {{1, 3}, {2, 4}}}}));
  CHECK(inv.ranks == std::vector<Rank>{1});
  check_trace(inv, {{{0}, {{4}}}, {{0}, {{3, 4}}}, {{0}, {{2, 3, 4}}}, {{1}, {{1, 2, 3, 4}}}});
  CHECK(inv.trace[3].primes == std::vector<std::uint64_t>{2, 3});
  CHECK(inv.trace[3].glued == zero_based({{2, 3, 4}}));
  CHECK(inv.chi() == 0);
}

TEST_CASE("S3 walkthrough")
{
  auto tom = TableOfMarks::from_lower_rows(kS3);
  auto inv = compute_galois_invariant(tom, partitions(4, {{2, {{1, 2}, {3, 4}}},
                                                          {3, {{1, 3}, {2}, {4}}}}));
  CHECK(inv.ranks == std::vector<Rank>{0});
  check_trace(inv,
              {{{0}, {{4}}}, {{0}, {{3, 4}}}, {{0, 0}, {{2}, {3, 4}}}, {{0}, {{1, 2, 3, 4}}}});
  CHECK(inv.chi() == 1);
}

TEST_CASE("A5 walkthrough")
{
  auto tom = TableOfMarks::from_lower_rows(kA5);
  auto inv = compute_galois_invariant(
      tom, partitions(9, {{2, {{1, 2, 4}, {3, 6}, {5, 7}, {8}, {9}}},
                          {3, {{1, 3}, {2}, {4, 8}, {5}, {6}, {7}, {9}}},
                          {5, {{1, 5}, {2}, {3}, {4}, {6}, {7}, {8}, {9}}}}));
  CHECK(inv.canonical_ranks() == std::vector<Rank>{0, 0});
  check_trace(inv, {
                       {{0}, {{9}}},
                       {{0, 0}, {{8}, {9}}},
                       {{0, 0, 0}, {{7}, {8}, {9}}},
                       {{0, 0, 0, 0}, {{6}, {7}, {8}, {9}}},
                       {{0, 0, 0, 0}, {{5, 7}, {6}, {8}, {9}}},
                       {{0, 0, 0, 0}, {{4, 8}, {5, 7}, {6}, {9}}},
                       {{0, 0, 0, 0}, {{3, 6}, {4, 8}, {5, 7}, {9}}},
                       {{0, 0, 0, 0}, {{2, 4, 8}, {3, 6}, {5, 7}, {9}}},
                       {{0, 0}, {{1, 2, 4, 8, 3, 6, 5, 7}, {9}}},
                   });
}

TEST_CASE("trivial group")
{
  auto tom = TableOfMarks::from_lower_rows({{1}});
  auto inv = compute_galois_invariant(tom, {});
  CHECK(inv.ranks == std::vector<Rank>{0});
  CHECK(inv.components == std::vector<Block>{{0}});
  CHECK(inv.trace.size() == 1);
}

TEST_CASE("input errors")
{
  auto tom = TableOfMarks::from_lower_rows(kC6);
  CHECK_THROWS_AS(compute_galois_invariant(tom, partitions(4, {{2, {{1, 2}, {3, 4}}}})),
                  InputError);
  PartitionMap short_partition;
  short_partition.emplace(2, PrimePartition{2, {{0, 1}, {2}}});
  short_partition.emplace(3, PrimePartition{3, {{0, 2}, {1, 3}}});
  CHECK_THROWS_AS(compute_galois_invariant(tom, short_partition), InputError);

  // Class 2 (index 6) is marked inside class 3 (index 4), which no subgroup
  // relation allows.
  auto bad = TableOfMarks::from_lower_rows({{12}, {6, 6}, {4, 2, 4}, {1, 1, 1, 1}});
  CHECK_THROWS_AS(compute_galois_invariant(bad, cyclic_extensions_marks_all(bad)), InputError);
}

TEST_CASE("unnormalized partitions are accepted")
{
  auto tom = TableOfMarks::from_lower_rows(kC6);
  PartitionMap parts;
  parts.emplace(2, PrimePartition{2, {{3, 2}, {1, 0}}});
  parts.emplace(3, PrimePartition{3, {{3, 1}, {2, 0}}});
  CHECK(compute_galois_invariant(tom, parts).ranks == std::vector<Rank>{1});
}

TEST_CASE("closed formulas")
{
  CHECK(solvable_rank_formula(TableOfMarks::from_lower_rows(kC6)) == 1);
  CHECK(solvable_rank_formula(TableOfMarks::from_lower_rows(kS3)) == 0);

  CHECK(divisor_rank_formula(1) == 0);
  CHECK(divisor_rank_formula(6) == 1);
  CHECK(divisor_rank_formula(12) == 2);
  for (std::uint64_t pk : {2, 4, 8, 16, 3, 9, 27, 81, 5, 25, 125, 7, 49}) {
    CHECK(divisor_rank_formula(pk) == 0);
  }
  for (std::uint64_t n = 1; n <= 500; ++n) {
    CAPTURE(n);
    CHECK(divisor_rank_formula(n) == oracle::divisor_rank_by_divisors(n));
  }

  for (std::size_t n : {12, 8, 27, 30}) {
    auto a = analyze_group(GroupSpec{Cyclic{n}});
    CHECK(a.invariant.ranks == std::vector<Rank>{divisor_rank_formula(n)});
    CHECK(solvable_rank_formula(a.tom) == divisor_rank_formula(n));
  }
}

TEST_CASE("euler characteristic")
{
  CHECK(euler_characteristic(std::vector<Rank>{0}) == 1);
  CHECK(euler_characteristic(std::vector<Rank>{0, 0}) == 2);
  CHECK(euler_characteristic(std::vector<Rank>{1}) == 0);
  CHECK(euler_characteristic(std::vector<Rank>{6, 0, 0, 0}) == -2);
}

TEST_CASE("chi changes by 1 - |P| at every step")
{
  for (const char* spec : {"S4", "A5", "SL2_5", "C2xS3", "D24"}) {
    auto a = analyze_group(parse_group_spec(spec));
    std::int64_t chi = 0;
    for (const auto& step : a.invariant.trace) {
      CHECK(step.chi_before == chi);
      CHECK(step.chi_after == chi + 1 - static_cast<std::int64_t>(step.primes.size()));
      chi = step.chi_after;
    }
    CHECK(chi == a.invariant.chi());
    CHECK(a.invariant.chi() <= static_cast<std::int64_t>(a.invariant.ranks.size()));
  }
}

TEST_CASE("shuffling equal-order classes leaves L and the components unchanged")
{
  std::mt19937 rng(99);
  for (const char* spec : {"S4", "D16", "C2xC2xC2", "S5", "A6", "C2xQ8"}) {
    CAPTURE(spec);
    auto base = analyze_group(parse_group_spec(spec));
    const auto& tom = base.tom;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> order(tom.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && tom(j, 0) == tom(i, 0)) ++j;
        std::shuffle(order.begin() + static_cast<std::ptrdiff_t>(i),
                     order.begin() + static_cast<std::ptrdiff_t>(j), rng);
        i = j;
      }
      auto shuffled = permuted(tom, order);
      auto inv = analyze_table(shuffled);
      CHECK(inv.canonical_ranks() == base.invariant.canonical_ranks());
      auto mapped = inv.components;
      for (auto& b : mapped) {
        for (auto& x : b) x = order[x];
      }
      CHECK(normalized_components(mapped) == normalized_components(base.invariant.components));
    }
  }
}
