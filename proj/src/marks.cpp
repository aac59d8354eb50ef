#include "burnside/marks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "burnside/error.hpp"

namespace burnside {

namespace {

std::string at(std::size_t i, std::size_t j)
{
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Groups indices by equal labels; blocks ordered by least member.
PrimePartition partition_from_labels(std::uint64_t prime, const std::vector<std::size_t>& labels)
{
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [label, block] : by_label) blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end());
  return PrimePartition{prime, std::move(blocks)};
}

}  // namespace

// ---------------------------------------------------------------------------
// TableOfMarks

TableOfMarks TableOfMarks::from_lower_rows(std::vector<std::vector<Mark>> rows,
                                           std::optional<std::string> name,
                                           std::optional<std::vector<Mark>> class_orders)
{
  if (rows.empty()) throw InputError("table of marks has no rows");
  const std::size_t s = rows.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (rows[i].size() != i + 1) {
      throw InputError("table of marks is not lower triangular: row " + std::to_string(i + 1) +
                       " has " + std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(i + 1));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (rows[i][j] < 0) throw InputError("negative mark at " + at(i, j));
    }
    if (rows[i][i] <= 0) throw InputError("non-positive diagonal mark at " + at(i, i));
  }

  const Mark order = rows[0][0];
  for (std::size_t i = 0; i < s; ++i) {
    const Mark index = rows[i][0];
    if (index == 0 || order % index != 0) {
      throw InputError("first-column mark " + std::to_string(index) + " at " + at(i, 0) +
                       " does not divide the group order " + std::to_string(order));
    }
    if (i > 0 && index > rows[i - 1][0]) {
      throw InputError("first column is not non-increasing at row " + std::to_string(i + 1) +
                       " (classes must be sorted by subgroup order)");
    }
    if (index == 1 && i + 1 != s) {
      throw InputError("only the last row may have first-column mark 1, found one at row " +
                       std::to_string(i + 1));
    }
    if (index % rows[i][i] != 0) {
      throw InputError("diagonal mark at " + at(i, i) + " does not divide the index " +
                       std::to_string(index));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (rows[i][j] > index) {
        throw InputError("mark at " + at(i, j) + " exceeds the first-column mark");
      }
    }
  }
  for (std::size_t j = 0; j < s; ++j) {
    if (rows[s - 1][j] != 1) {
      throw InputError("last row must be all ones (the whole group), found " +
                       std::to_string(rows[s - 1][j]) + " at " + at(s - 1, j));
    }
  }
  if (class_orders) {
    if (class_orders->size() != s) {
      throw InputError("class_orders has " + std::to_string(class_orders->size()) +
                       " entries for " + std::to_string(s) + " classes");
    }
    for (std::size_t i = 0; i < s; ++i) {
      if ((*class_orders)[i] * rows[i][0] != order) {
        throw InputError("class order " + std::to_string((*class_orders)[i]) + " of class " +
                         std::to_string(i + 1) + " is inconsistent with index " +
                         std::to_string(rows[i][0]));
      }
    }
  }

  TableOfMarks tom;
  tom.rows_ = std::move(rows);
  tom.name_ = std::move(name);
  tom.class_orders_ = std::move(class_orders);
  return tom;
}

std::vector<Mark> TableOfMarks::diagonal() const
{
  std::vector<Mark> d(size());
  for (std::size_t i = 0; i < size(); ++i) d[i] = rows_[i][i];
  return d;
}

// ---------------------------------------------------------------------------
// PrimePartition

PrimePartition PrimePartition::from_blocks(std::uint64_t prime,
                                           std::vector<std::vector<std::size_t>> blocks,
                                           std::size_t size)
{
  std::vector<bool> seen(size, false);
  for (auto& block : blocks) {
    if (block.empty()) throw InputError("empty block in partition");
    std::sort(block.begin(), block.end());
    for (auto i : block) {
      if (i >= size || seen[i]) {
        throw InputError("partition blocks do not cover the classes exactly once");
      }
      seen[i] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw InputError("partition blocks do not cover every class");
  }
  std::sort(blocks.begin(), blocks.end());
  return PrimePartition{prime, std::move(blocks)};
}

const std::vector<std::size_t>& PrimePartition::block_containing(std::size_t i) const
{
  for (const auto& b : blocks) {
    if (std::binary_search(b.begin(), b.end(), i)) return b;
  }
  throw std::out_of_range("class index not covered by partition");
}

// ---------------------------------------------------------------------------

TableOfMarks table_of_marks(const FiniteGroup& g, const ClassTable& classes)
{
  if (g.order() != classes.group_order()) {
    throw std::invalid_argument("class table belongs to a different group");
  }
  const std::size_t s = classes.size();
  std::vector<std::vector<Mark>> rows(s);
  std::vector<Mark> orders(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto& big = classes[i];
    orders[i] = static_cast<Mark>(big.order);
    rows[i].assign(i + 1, 0);
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& small = classes[j];
      if (big.order % small.order != 0) continue;
      // |{x : x^-1 K x <= H}| = (#conjugates of K inside H) * |N(K)|.
      std::size_t inside = 0;
      for (const auto& c : small.conjugates) {
        if (c.is_subset_of(big.representative)) ++inside;
      }
      std::size_t fixing = inside * small.normalizer_order;
      if (fixing % big.order != 0) {
        throw std::logic_error("mark is not an integer at " + at(i, j));
      }
      rows[i][j] = static_cast<Mark>(fixing / big.order);
    }
  }
  return TableOfMarks::from_lower_rows(std::move(rows), std::nullopt, std::move(orders));
}

PrimePartition cyclic_extensions_marks(const TableOfMarks& tom, std::uint64_t p)
{
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  const std::size_t s = tom.size();
  const auto modulus = static_cast<Mark>(p);
  std::map<std::vector<Mark>, std::size_t> column_ids;
  std::vector<std::size_t> labels(s);
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Mark> column(s);
    for (std::size_t i = 0; i < s; ++i) column[i] = tom(i, j) % modulus;
    labels[j] = column_ids.try_emplace(std::move(column), column_ids.size()).first->second;
  }
  return partition_from_labels(p, labels);
}

PrimePartition cyclic_extensions_structural(const FiniteGroup& /*g*/, const ClassTable& classes,
                                            std::uint64_t p)
{
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  const std::size_t s = classes.size();
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t h = 0; h < s; ++h) {
    const auto& small = classes[h];
    for (std::size_t k = h + 1; k < s; ++k) {
      const auto& big = classes[k];
      if (big.order != small.order * p) continue;
      // Conjugating both, H can be taken to be the representative; then
      // H normal in K' means H <= K' <= N(H).
      bool related = std::any_of(big.conjugates.begin(), big.conjugates.end(),
                                 [&](const ElementSet& c) {
                                   return small.representative.is_subset_of(c) &&
                                          c.is_subset_of(small.normalizer);
                                 });
      if (related) parent[find(k)] = find(h);
    }
  }
  std::vector<std::size_t> labels(s);
  for (std::size_t i = 0; i < s; ++i) labels[i] = find(i);
  return partition_from_labels(p, labels);
}

PartitionMap cyclic_extensions_marks_all(const TableOfMarks& tom)
{
  PartitionMap out;
  for (auto p : prime_divisors(static_cast<std::uint64_t>(tom.group_order()))) {
    out.emplace(p, cyclic_extensions_marks(tom, p));
  }
  return out;
}

PartitionMap cyclic_extensions_structural_all(const FiniteGroup& g, const ClassTable& classes)
{
  PartitionMap out;
  for (auto p : prime_divisors(g.order())) {
    out.emplace(p, cyclic_extensions_structural(g, classes, p));
  }
  return out;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  if (n == 0) throw InputError("prime divisors of 0 are undefined");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace burnside
