// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "burnside/check.hpp"
#include "burnside/cli.hpp"
#include "burnside/error.hpp"
#include "burnside/formats.hpp"
#include "burnside/pipeline.hpp"

using namespace burnside;

namespace {

using Rows = std::vector<std::vector<Mark>>;

struct Criterion {
  int number;
  std::string title;
  double time_limit_seconds;
  std::function<std::string()> run;  // empty string on success
};

GroupAnalysis analyze(const std::string& spec)
{
  auto parsed = parse_group_spec(spec);
  auto order = expected_order(parsed).value_or(kDefaultOrderCap);
  return analyze_group(parsed, std::max<std::size_t>(kDefaultOrderCap, order));
}

std::vector<Block> zero_based(std::vector<Block> blocks)
{
  for (auto& b : blocks) {
    for (auto& x : b) --x;
  }
  return blocks;
}

const std::map<std::string, Rows> kGoldenTables = {
    {"C6", {{6}, {3, 3}, {2, 0, 2}, {1, 1, 1, 1}}},
    {"S3", {{6}, {3, 1}, {2, 0, 2}, {1, 1, 1, 1}}},
    {"A5",
     {{60},
      {30, 2},
      {20, 0, 2},
      {15, 3, 0, 3},
      {12, 0, 0, 0, 2},
      {10, 2, 1, 0, 0, 1},
      {6, 2, 0, 0, 1, 0, 1},
      {5, 1, 2, 1, 0, 0, 0, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1}}},
};

std::string golden_tables()
{
  for (const auto& [spec, rows] : kGoldenTables) {
    if (analyze(spec).tom.lower_rows() != rows) return spec + " table differs";
  }
  return {};
}

std::string golden_partitions()
{
  struct Case {
    std::string spec;
    std::uint64_t p;
    std::vector<Block> blocks;
  };
  const std::vector<Case> cases = {
      {"C6", 2, {{1, 2}, {3, 4}}},
      {"C6", 3, {{1, 3}, {2, 4}}},
      {"S3", 2, {{1, 2}, {3, 4}}},
      {"S3", 3, {{1, 3}, {2}, {4}}},
      {"A5", 2, {{1, 2, 4}, {3, 6}, {5, 7}, {8}, {9}}},
      {"A5", 3, {{1, 3}, {2}, {4, 8}, {5}, {6}, {7}, {9}}},
      {"A5", 5, {{1, 5}, {2}, {3}, {4}, {6}, {7}, {8}, {9}}},
  };
  for (const auto& c : cases) {
    auto a = analyze(c.spec);
    if (cyclic_extensions_marks(a.tom, c.p).blocks != zero_based(c.blocks)) {
      return c.spec + " p=" + std::to_string(c.p) + " differs";
    }
  }
  return {};
}

std::string golden_walkthroughs()
{
  struct Case {
    std::string spec;
    std::vector<Rank> final_ranks;
    std::vector<std::pair<std::vector<Rank>, std::vector<Block>>> states;
  };
  const std::vector<Case> cases = {
      {"C6",
       {1},
       {{{0}, {{4}}}, {{0}, {{3, 4}}}, {{0}, {{2, 3, 4}}}, {{1}, {{1, 2, 3, 4}}}}},
      {"S3",
       {0},
       {{{0}, {{4}}}, {{0}, {{3, 4}}}, {{0, 0}, {{2}, {3, 4}}}, {{0}, {{1, 2, 3, 4}}}}},
      {"A5",
       {0, 0},
       {{{0}, {{9}}},
        {{0, 0}, {{8}, {9}}},
        {{0, 0, 0}, {{7}, {8}, {9}}},
        {{0, 0, 0, 0}, {{6}, {7}, {8}, {9}}},
        {{0, 0, 0, 0}, {{5, 7}, {6}, {8}, {9}}},
        {{0, 0, 0, 0}, {{4, 8}, {5, 7}, {6}, {9}}},
        {{0, 0, 0, 0}, {{3, 6}, {4, 8}, {5, 7}, {9}}},
        {{0, 0, 0, 0}, {{2, 4, 8}, {3, 6}, {5, 7}, {9}}},
        {{0, 0}, {{1, 2, 4, 8, 3, 6, 5, 7}, {9}}}}},
  };
  for (const auto& c : cases) {
    const auto& inv = analyze(c.spec).invariant;
    if (inv.canonical_ranks() != c.final_ranks) return c.spec + " final L differs";
    if (inv.trace.size() != c.states.size()) return c.spec + " step count differs";
    for (std::size_t i = 0; i < c.states.size(); ++i) {
      if (inv.trace[i].ranks_after != c.states[i].first ||
          inv.trace[i].components_after != zero_based(c.states[i].second)) {
        return c.spec + " state after step " + std::to_string(i + 1) + " differs";
      }
    }
  }
  return {};
}

std::string table_rows()
{
  const std::vector<std::pair<std::string, std::vector<Rank>>> rows = {
      {"A5", {0, 0}},  {"A6", {0, 0, 0, 0}}, {"S5", {1, 0}},    {"S6", {6, 0, 0, 0}},
      {"SL2_3", {1}},  {"SL2_5", {2, 0}},    {"SL2_7", {3, 0}},
  };
  std::string failures;
  for (const auto& [spec, expected] : rows) {
    auto got = analyze(spec).invariant.canonical_ranks();
    if (got != expected) failures += spec + " gave " + render_ranks(got) + "; ";
  }
  return failures;
}

std::string oracle_triangle()
{
  for (std::size_t n = 1; n <= 200; ++n) {
    auto a = analyze_group(GroupSpec{Cyclic{n}});
    auto expected = divisor_rank_formula(n);
    if (a.invariant.ranks != std::vector<Rank>{expected} ||
        solvable_rank_formula(a.tom) != expected) {
      return "C" + std::to_string(n);
    }
  }
  return {};
}

std::string solvable_formula()
{
  std::vector<std::string> specs;
  for (int n = 1; n <= 360; ++n) specs.push_back("C" + std::to_string(n));
  for (int n = 2; n <= 360; n += 2) specs.push_back("D" + std::to_string(n));
  for (const char* s : {"Q8", "SL2_3", "S3", "S4", "A4", "C2xC2", "C3xC3", "C2xC2xC2", "C2xC4",
                        "C2xC6", "C4xC4", "C5xC5", "C2xC2xC2xC2", "C3xC3xC3", "C2xC3xC5",
                        "C4xC6", "C6xC6", "C2xC2xC3", "C4xC8", "C9xC9", "C3xC15", "C6xC12"}) {
    specs.emplace_back(s);
  }
  for (const auto& spec : specs) {
    auto a = analyze(spec);
    if (!is_solvable(a.group)) return spec + " unexpectedly not solvable";
    const auto& r = a.invariant.ranks;
    if (r.size() != 1 || r[0] != solvable_rank_formula(a.tom)) {
      return spec + " gave " + render_ranks(r);
    }
  }
  return {};
}

std::string p_groups()
{
  for (const char* spec : {"C2", "C4", "C8", "C16", "C32", "C64", "C3", "C9", "C27", "C81",
                           "C5", "C25", "C125", "C7", "C49", "D8", "Q8", "C2xC2", "C3xC3"}) {
    if (analyze(spec).invariant.ranks != std::vector<Rank>{0}) return spec;
  }
  return {};
}

std::string dress_connectivity()
{
  for (const auto& entry : builtin_catalog()) {
    auto a = analyze(entry.spec);
    bool connected = a.invariant.ranks.size() == 1;
    if (connected != is_solvable(a.group)) return entry.spec;
  }
  for (const char* spec : {"A5", "SL2_5"}) {
    if (analyze(spec).invariant.ranks.size() != 2) return std::string(spec) + " not two components";
  }
  return {};
}

std::string chi_additivity()
{
  for (const auto& entry : builtin_catalog()) {
    for (const auto& step : analyze(entry.spec).invariant.trace) {
      if (step.chi_after != step.chi_before + 1 - static_cast<std::int64_t>(step.primes.size())) {
        return entry.spec + " at class " + std::to_string(step.index + 1);
      }
    }
  }
  return {};
}

std::string method_agreement()
{
  for (const auto& entry : builtin_catalog()) {
    if (entry.order > 360) continue;
    auto a = analyze(entry.spec);
    auto bad = a.method_disagreements();
    if (!bad.empty()) return entry.spec + " at p=" + std::to_string(bad.front());
  }
  return {};
}

std::string robustness()
{
  for (const auto& entry : builtin_catalog()) {
    auto a = analyze(entry.spec);
    auto doc = to_document(a.tom);
    for (int route = 0; route < 2; ++route) {
      auto parsed = route == 0 ? parse_gap_tom(render_gap_tom(doc))
                               : read_json_tom(write_json_tom(doc));
      auto inv = analyze_table(to_table(parsed));
      if (inv.canonical_ranks() != a.invariant.canonical_ranks() ||
          normalized_components(inv.components) != normalized_components(a.invariant.components)) {
        return entry.spec + (route == 0 ? " (gap)" : " (json)");
      }
    }
  }

  const std::vector<std::pair<std::string, std::string>> malformed = {
      {"ragged.txt", "[[6],[3,1,0]]"},
      {"zero_diagonal.txt", "[[6],[3,0],[1,1,1]]"},
      {"order_mismatch.json", R"({"order":7,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]]})"},
  };
  for (const auto& [name, text] : malformed) {
    auto path = std::filesystem::temp_directory_path() / ("burnside_acceptance_" + name);
    std::ofstream(path) << text;
    std::ostringstream out, err;
    int code = run_cli({"compute", "--tom", path.string()}, out, err);
    std::filesystem::remove(path);
    if (code != 1) return name + " exited with " + std::to_string(code);
  }
  return {};
}

}  // namespace

int main()
{
  const std::vector<Criterion> criteria = {
      {1, "golden tables of marks (C6, S3, A5)", 1.0, golden_tables},
      {2, "golden cyclic-extension partitions", 1.0, golden_partitions},
      {3, "golden L values and walkthrough traces", 1.0, golden_walkthroughs},
      {4, "L for A5, A6, S5, S6, SL2(3), SL2(5), SL2(7)", 120.0, table_rows},
      {5, "cyclic groups N <= 200: L = divisor formula = solvable formula", 60.0, oracle_triangle},
      {6, "solvable groups: one component, rank = solvable formula", 0.0, solvable_formula},
      {7, "p-groups have L = [0]", 0.0, p_groups},
      {8, "one component iff solvable, across the catalog", 0.0, dress_connectivity},
      {9, "chi additivity at every step", 0.0, chi_additivity},
      {10, "marks and structural partitions agree (order <= 360)", 0.0, method_agreement},
      {11, "serialize-parse-compute round trip; malformed tables exit 1", 0.0, robustness},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
      detail = "took " + std::to_string(seconds) + " s";
    }
    bool ok = detail.empty();
    failed += ok ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title << " (" << timing
              << ")" << (ok ? "" : ": " + detail) << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
