#include "burnside/check.hpp"

#include <algorithm>
#include <sstream>

namespace burnside {

std::vector<Block> normalized_components(const std::vector<Block>& components)
{
  auto out = components;
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_table(const std::string& name, const GroupAnalysis& a,
                 std::vector<CheckFailure>& failures)
{
  const auto& tom = a.tom;
  const auto& classes = a.classes;
  const auto order = static_cast<Mark>(a.group.order());
  auto fail = [&](const std::string& detail) {
    failures.push_back({name, "table-of-marks", detail});
  };
  for (std::size_t i = 0; i < tom.size(); ++i) {
    if (tom(i, 0) * static_cast<Mark>(classes[i].order) != order) {
      fail("first column is not the index at row " + std::to_string(i + 1));
    }
    if (tom(i, i) != static_cast<Mark>(classes[i].weyl_order)) {
      fail("diagonal is not the Weyl order at row " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < tom.size(); ++j) {
      bool nonzero = tom(i, j) != 0;
      if (nonzero != is_subconjugate(classes, j, i)) {
        fail("zero pattern differs from subconjugacy at (" + std::to_string(i + 1) + "," +
             std::to_string(j + 1) + ")");
      }
      if (tom(i, j) > tom(i, 0)) fail("mark exceeds index");
    }
  }
}

bool same_result(const GaloisInvariant& x, const GaloisInvariant& y)
{
  return x.canonical_ranks() == y.canonical_ranks() &&
         normalized_components(x.components) == normalized_components(y.components);
}

}  // namespace

std::vector<CheckFailure> check_analysis(const std::string& name, const GroupSpec& spec,
                                         const GroupAnalysis& a)
{
  std::vector<CheckFailure> failures;
  check_table(name, a, failures);

  for (auto p : a.method_disagreements()) {
    failures.push_back({name, "method-agreement",
                        "marks and structural partitions differ at p = " + std::to_string(p)});
  }

  const auto& inv = a.invariant;
  for (const auto& step : inv.trace) {
    if (step.chi_after != step.chi_before + 1 - static_cast<std::int64_t>(step.primes.size())) {
      failures.push_back({name, "chi-additivity",
                          "step at class " + std::to_string(step.index + 1)});
    }
  }
  if (inv.ranks.size() != inv.components.size()) {
    failures.push_back({name, "one-rank-per-component", "size mismatch"});
  }

  const bool solvable = is_solvable(a.group);
  if ((inv.ranks.size() == 1) != solvable) {
    failures.push_back({name, "dress-connectivity",
                        std::to_string(inv.ranks.size()) + " components but group is " +
                            (solvable ? "solvable" : "not solvable")});
  }
  if (solvable && inv.ranks.size() == 1 && inv.ranks[0] != solvable_rank_formula(a.tom)) {
    failures.push_back({name, "solvable-formula",
                        "rank " + std::to_string(inv.ranks[0]) + " vs formula " +
                            std::to_string(solvable_rank_formula(a.tom))});
  }
  if (auto* c = std::get_if<Cyclic>(&spec.kind)) {
    auto expected = divisor_rank_formula(c->n);
    if (inv.ranks.size() != 1 || inv.ranks[0] != expected) {
      failures.push_back({name, "divisor-formula", "expected [" + std::to_string(expected) + "]"});
    }
  }

  auto doc = to_document(a.tom);
  auto from_gap = analyze_table(to_table(parse_gap_tom(render_gap_tom(doc))));
  if (!same_result(from_gap, inv)) {
    failures.push_back({name, "round-trip-gap", "result changed after serialization"});
  }
  auto from_json = analyze_table(to_table(read_json_tom(write_json_tom(doc))));
  if (!same_result(from_json, inv)) {
    failures.push_back({name, "round-trip-json", "result changed after serialization"});
  }
  return failures;
}

CheckReport run_checks(std::uint64_t max_order)
{
  CheckReport report;
  for (const auto& entry : builtin_catalog()) {
    if (entry.order > max_order) continue;
    auto spec = parse_group_spec(entry.spec);
    auto analysis = analyze_group(spec, std::max<std::size_t>(default_order_cap(), entry.order));
    auto failures = check_analysis(entry.spec, spec, analysis);
    CheckRow row;
    row.group = entry.spec;
    row.order = entry.order;
    row.classes = analysis.classes.size();
    row.solvable = is_solvable(analysis.group);
    row.ranks = analysis.invariant.canonical_ranks();
    row.ok = failures.empty();
    report.rows.push_back(std::move(row));
    for (auto& f : failures) report.failures.push_back(std::move(f));
  }
  return report;
}

std::string format_report(const CheckReport& report)
{
  std::ostringstream out;
  out << "group         order  classes  solvable  L                    status\n";
  for (const auto& r : report.rows) {
    std::string l = render_ranks(r.ranks);
    out << r.group << std::string(r.group.size() < 14 ? 14 - r.group.size() : 1, ' ');
    std::string order = std::to_string(r.order);
    out << std::string(order.size() < 5 ? 5 - order.size() : 0, ' ') << order << "  ";
    std::string cls = std::to_string(r.classes);
    out << std::string(cls.size() < 7 ? 7 - cls.size() : 0, ' ') << cls << "  ";
    out << (r.solvable ? "yes     " : "no      ") << "  ";
    out << l << std::string(l.size() < 21 ? 21 - l.size() : 1, ' ');
    out << (r.ok ? "ok" : "FAIL") << "\n";
  }
  for (const auto& f : report.failures) {
    out << "FAIL " << f.group << ": " << f.invariant << ": " << f.detail << "\n";
  }
  out << report.rows.size() << " groups checked, " << report.failures.size() << " failures\n";
  return out.str();
}

}  // namespace burnside
