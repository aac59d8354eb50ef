#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/galois.hpp"
#include "burnside/group.hpp"
#include "burnside/marks.hpp"

namespace burnside {

/// Grammar: C<n> | S<n> | A<n> | D<n> (n even, the order) | Q8 | SL2_<p>
/// | <spec>x<spec> | gens:<path>. A gens: factor takes the rest of the
/// text as its path, so it must come last in a product. Throws ParseError.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text of a spec. Inline generator lists render as their cycles
/// in braces, which the parser does not accept.
std::string render_group_spec(const GroupSpec& spec);

/// A table of marks as stored on disk: ragged lower-triangular rows.
struct TomDocument {
  std::optional<std::string> name;
  std::vector<std::vector<Mark>> marks;
  std::optional<std::vector<Mark>> class_orders;

  friend bool operator==(const TomDocument&, const TomDocument&) = default;
};

TableOfMarks to_table(const TomDocument& doc);
TomDocument to_document(const TableOfMarks& tom);

/// Bracket list of rows, e.g. "[[6],[3,3],[2,0,2],[1,1,1,1]]". Any
/// whitespace is allowed between tokens. The result is validated as a
/// table of marks.
TomDocument parse_gap_tom(std::string_view text);
std::string render_gap_tom(const TomDocument& doc);

/// {"name": string?, "order": int, "marks": [[int]], "class_orders": [int]?}
/// with order == marks[0][0].
TomDocument read_json_tom(std::string_view text);
/// Compact JSON with sorted keys.
std::string write_json_tom(const TomDocument& doc);

enum class OutputMode { human, json };

struct EmitOptions {
  OutputMode mode = OutputMode::human;
  bool trace = false;
  /// How the cyclic-extension partitions were obtained, if reported.
  std::optional<std::string> method;
  std::optional<std::string> name;
};

/// Renders L (descending), the components paired with it, chi, and
/// optionally one line per gluing step. Indices are 1-based.
std::string emit_result(const GaloisInvariant& inv, const EmitOptions& options = {});

/// "[[1,2],[3,4]]" with 1-based indices.
std::string render_blocks(const std::vector<Block>& blocks);
std::string render_ranks(const std::vector<Rank>& ranks);

}  // namespace burnside
