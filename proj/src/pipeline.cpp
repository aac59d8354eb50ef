#include "burnside/pipeline.hpp"

#include <algorithm>

namespace burnside {

std::vector<std::uint64_t> GroupAnalysis::method_disagreements() const
{
  std::vector<std::uint64_t> primes;
  for (const auto& [p, partition] : marks_partitions) {
    auto it = structural_partitions.find(p);
    if (it == structural_partitions.end() || it->second != partition) primes.push_back(p);
  }
  return primes;
}

GroupAnalysis analyze_group(const GroupSpec& spec, std::size_t cap)
{
  auto group = make_group(spec, cap);
  auto classes = conjugacy_classes_of_subgroups(group);
  auto tom = table_of_marks(group, classes);
  tom.set_name(render_group_spec(spec));
  auto marks = cyclic_extensions_marks_all(tom);
  auto structural = cyclic_extensions_structural_all(group, classes);
  auto invariant = compute_galois_invariant(tom, marks);
  return GroupAnalysis{std::move(group),     std::move(classes),    std::move(tom),
                       std::move(marks),     std::move(structural), std::move(invariant)};
}

GaloisInvariant analyze_table(const TableOfMarks& tom)
{
  return compute_galois_invariant(tom, cyclic_extensions_marks_all(tom));
}

std::vector<CatalogEntry> builtin_catalog()
{
  std::vector<std::string> specs;
  for (int n = 1; n <= 30; ++n) specs.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 24; n += 2) specs.push_back("D" + std::to_string(n));
  for (int n : {30, 36, 60}) specs.push_back("D" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) specs.push_back("S" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) specs.push_back("A" + std::to_string(n));
  for (const char* s : {"Q8", "SL2_2", "SL2_3", "SL2_5", "SL2_7", "C2xC2", "C3xC3", "C2xC2xC2",
                        "C2xC4", "C2xC6", "C4xC4", "C5xC5", "C2xC2xC2xC2", "C2xS3", "C3xS3",
                        "S3xS3", "C2xQ8", "C2xD8", "C2xA4", "C3xA4", "C2xS4", "C2xA5"}) {
    specs.emplace_back(s);
  }

  std::vector<CatalogEntry> out;
  for (auto& s : specs) {
    auto order = expected_order(parse_group_spec(s));
    out.push_back({s, order.value_or(0)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.order < b.order; });
  return out;
}

}  // namespace burnside
