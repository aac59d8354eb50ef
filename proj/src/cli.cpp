#include "burnside/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "burnside/check.hpp"
#include "burnside/error.hpp"
#include "burnside/formats.hpp"
#include "burnside/pipeline.hpp"

namespace burnside {

namespace {

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string resolve_format(const std::string& format, const std::string& path)
{
  if (!format.empty()) return format;
  return path.ends_with(".json") ? "json" : "gap";
}

TomDocument load_tom(const std::string& path, const std::string& format)
{
  auto text = read_file(path);
  return resolve_format(format, path) == "json" ? read_json_tom(text) : parse_gap_tom(text);
}

// Throws when the two partition methods disagree: the discrepancy must be
// reported, not resolved.
void require_agreement(const GroupAnalysis& a)
{
  auto bad = a.method_disagreements();
  if (bad.empty()) return;
  std::string primes;
  for (auto p : bad) primes += (primes.empty() ? "" : ",") + std::to_string(p);
  throw std::logic_error("cyclic-extension methods disagree at p = " + primes + ": marks " +
                         render_blocks(a.marks_partitions.at(bad.front()).blocks) +
                         ", structural " +
                         render_blocks(a.structural_partitions.at(bad.front()).blocks));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Etale fundamental groupoid of the Burnside ring from a table of marks",
               "burnside"};
  app.require_subcommand(1);

  std::string group_text, tom_path, format, out_path, method = "marks";
  bool json = false, trace = false;
  std::uint64_t prime = 0, max_order = 60;

  auto* compute = app.add_subcommand("compute", "Compute L for a group or a table of marks");
  auto* c_group = compute->add_option("--group", group_text, "Group spec, e.g. C6, S3, A5, SL2_5, C2xC2");
  auto* c_tom = compute->add_option("--tom", tom_path, "Table of marks file");
  c_group->excludes(c_tom);
  compute->add_option("--format", format, "Table file format (default: by extension)")
      ->check(CLI::IsMember({"gap", "json"}));
  compute->add_flag("--json", json, "JSON output");
  compute->add_flag("--trace", trace, "Print one line per gluing step");

  auto* tom = app.add_subcommand("tom", "Write the table of marks of a group");
  tom->add_option("--group", group_text, "Group spec")->required();
  tom->add_option("--out", out_path, "Output file (default: stdout)");
  tom->add_option("--format", format, "Output format")->check(CLI::IsMember({"gap", "json"}));

  auto* cycext = app.add_subcommand("cycext", "Cyclic-extension partition at a prime");
  auto* x_group = cycext->add_option("--group", group_text, "Group spec");
  auto* x_tom = cycext->add_option("--tom", tom_path, "Table of marks file");
  x_group->excludes(x_tom);
  cycext->add_option("--format", format, "Table file format")
      ->check(CLI::IsMember({"gap", "json"}));
  cycext->add_option("--prime", prime, "Prime p")->required();
  cycext->add_option("--method", method, "marks or structural")
      ->check(CLI::IsMember({"marks", "structural"}));

  auto* check = app.add_subcommand("check", "Run the invariant suite over built-in groups");
  check->add_option("--max-order", max_order, "Largest group order to include");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (compute->parsed() || cycext->parsed()) {
      if (group_text.empty() == tom_path.empty()) {
        throw InputError("exactly one of --group and --tom is required");
      }
    }

    if (compute->parsed()) {
      EmitOptions options;
      options.mode = json ? OutputMode::json : OutputMode::human;
      options.trace = trace;
      if (!group_text.empty()) {
        auto analysis = analyze_group(parse_group_spec(group_text));
        require_agreement(analysis);
        options.name = group_text;
        options.method = "marks (structural agrees)";
        out << emit_result(analysis.invariant, options);
      } else {
        auto table = to_table(load_tom(tom_path, format));
        options.name = table.name();
        options.method = "marks";
        out << emit_result(analyze_table(table), options);
      }
      return 0;
    }

    if (tom->parsed()) {
      auto analysis = analyze_group(parse_group_spec(group_text));
      auto doc = to_document(analysis.tom);
      auto text = (format == "json" ? write_json_tom(doc) : render_gap_tom(doc)) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      return 0;
    }

    if (cycext->parsed()) {
      if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not a prime");
      PrimePartition partition;
      if (!group_text.empty()) {
        auto spec = parse_group_spec(group_text);
        auto group = make_group(spec);
        auto classes = conjugacy_classes_of_subgroups(group);
        partition = method == "structural"
                        ? cyclic_extensions_structural(group, classes, prime)
                        : cyclic_extensions_marks(table_of_marks(group, classes), prime);
      } else {
        if (method == "structural") {
          throw InputError("the structural method needs --group; a table file has no group");
        }
        partition = cyclic_extensions_marks(to_table(load_tom(tom_path, format)), prime);
      }
      out << render_blocks(partition.blocks) << "\n";
      return 0;
    }

    if (check->parsed()) {
      auto report = run_checks(max_order);
      out << format_report(report);
      if (!report.ok()) {
        for (const auto& f : report.failures) {
          err << "invariant " << f.invariant << " failed for " << f.group << ": " << f.detail
              << "\n";
        }
        return 1;
      }
      return 0;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace burnside
