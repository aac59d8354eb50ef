#include "burnside/formats.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "burnside/error.hpp"

namespace burnside {

namespace {

bool is_space(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space()
  {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n = 1) { pos_ += n; }

  void expect(char c)
  {
    skip_space();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'" + found(), pos_);
    }
    ++pos_;
  }

  std::uint64_t unsigned_number()
  {
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("number too large", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number" + found(), start);
    return value;
  }

  Mark signed_number()
  {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    auto magnitude = unsigned_number();
    if (magnitude > static_cast<std::uint64_t>(std::numeric_limits<Mark>::max())) {
      throw ParseError("number too large", start);
    }
    auto value = static_cast<Mark>(magnitude);
    return negative ? -value : value;
  }

  std::string found() const
  {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s)
{
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

GroupSpec parse_factor(Cursor& in)
{
  in.skip_space();
  std::size_t start = in.position();
  auto rest = in.rest();

  if (rest.starts_with("gens:")) {
    in.advance(5);
    auto path = trim(in.rest());
    if (path.empty()) throw ParseError("missing path after 'gens:'", in.position());
    in.advance(in.rest().size());
    return GroupSpec{GeneratorFile{path}};
  }
  if (rest.starts_with("Q8")) {
    in.advance(2);
    return GroupSpec{Quaternion8{}};
  }
  if (rest.starts_with("SL2_")) {
    in.advance(4);
    auto p = in.unsigned_number();
    if (!is_prime(p) || p > 7) {
      throw ParseError("SL2 needs a prime field F_p with p <= 7, got " + std::to_string(p), start);
    }
    return GroupSpec{SL2{static_cast<std::size_t>(p)}};
  }

  char kind = in.peek();
  if (kind != 'C' && kind != 'S' && kind != 'A' && kind != 'D') {
    throw ParseError("expected a group (C, S, A, D, Q8, SL2_, gens:)" + in.found(), start);
  }
  in.advance();
  auto n = in.unsigned_number();
  if (n == 0) throw ParseError("group parameter must be at least 1", start);
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError("group parameter too large", start);
  }
  auto value = static_cast<std::size_t>(n);
  switch (kind) {
    case 'C':
      return GroupSpec{Cyclic{value}};
    case 'S':
      return GroupSpec{Symmetric{value}};
    case 'A':
      return GroupSpec{Alternating{value}};
    default:
      if (value % 2 != 0) {
        throw ParseError("dihedral order must be even, got " + std::to_string(value), start);
      }
      return GroupSpec{Dihedral{value}};
  }
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text)
{
  Cursor in(text);
  std::vector<GroupSpec> factors;
  for (;;) {
    factors.push_back(parse_factor(in));
    in.skip_space();
    if (in.at_end()) break;
    if (in.peek() != 'x') throw ParseError("expected 'x' or end of input" + in.found(), in.position());
    in.advance();
  }
  if (factors.size() == 1) return std::move(factors.front());
  return GroupSpec{std::move(factors)};
}

std::string render_group_spec(const GroupSpec& spec)
{
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return "C" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return "S" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<T, Alternating>) {
          return "A" + std::to_string(k.n);
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          return "D" + std::to_string(k.order);
        } else if constexpr (std::is_same_v<T, Quaternion8>) {
          return "Q8";
        } else if constexpr (std::is_same_v<T, SL2>) {
          return "SL2_" + std::to_string(k.p);
        } else if constexpr (std::is_same_v<T, GeneratorFile>) {
          return "gens:" + k.path;
        } else if constexpr (std::is_same_v<T, FromGenerators>) {
          std::string out = "{";
          for (std::size_t i = 0; i < k.gens.size(); ++i) {
            if (i) out += ',';
            out += k.gens[i].to_string();
          }
          return out + "}";
        } else {
          std::string out;
          for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) out += 'x';
            out += render_group_spec(k[i]);
          }
          return out;
        }
      },
      spec.kind);
}

// ---------------------------------------------------------------------------
// Tables of marks

TableOfMarks to_table(const TomDocument& doc)
{
  return TableOfMarks::from_lower_rows(doc.marks, doc.name, doc.class_orders);
}

TomDocument to_document(const TableOfMarks& tom)
{
  return TomDocument{tom.name(), tom.lower_rows(), tom.class_orders()};
}

TomDocument parse_gap_tom(std::string_view text)
{
  Cursor in(text);
  TomDocument doc;
  in.expect('[');
  in.skip_space();
  if (in.peek() == ']') throw ParseError("table of marks has no rows", in.position());
  for (;;) {
    in.expect('[');
    std::vector<Mark> row;
    in.skip_space();
    if (in.peek() != ']') {
      for (;;) {
        row.push_back(in.signed_number());
        in.skip_space();
        if (in.peek() == ',') {
          in.advance();
          continue;
        }
        break;
      }
    }
    in.expect(']');
    doc.marks.push_back(std::move(row));
    in.skip_space();
    if (in.peek() == ',') {
      in.advance();
      continue;
    }
    break;
  }
  in.expect(']');
  in.skip_space();
  if (!in.at_end()) throw ParseError("trailing characters after table of marks", in.position());
  to_table(doc);
  return doc;
}

std::string render_gap_tom(const TomDocument& doc)
{
  std::string out = "[";
  for (std::size_t i = 0; i < doc.marks.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < doc.marks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(doc.marks[i][j]);
    }
    out += ']';
  }
  return out + "]";
}

TomDocument read_json_tom(std::string_view text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw InputError("table of marks JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "order" && key != "marks" && key != "class_orders") {
      throw InputError("unexpected key '" + key + "' in table of marks JSON");
    }
  }

  auto integer = [](const nlohmann::json& v, const std::string& what) -> Mark {
    if (!v.is_number_integer()) throw InputError(what + " must be an integer");
    return v.get<Mark>();
  };

  TomDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("order")) throw InputError("missing 'order'");
  Mark order = integer(j["order"], "'order'");
  if (!j.contains("marks") || !j["marks"].is_array()) {
    throw InputError("'marks' must be an array of rows");
  }
  for (const auto& row : j["marks"]) {
    if (!row.is_array()) throw InputError("each row of 'marks' must be an array");
    std::vector<Mark> r;
    for (const auto& v : row) r.push_back(integer(v, "mark"));
    doc.marks.push_back(std::move(r));
  }
  if (j.contains("class_orders")) {
    if (!j["class_orders"].is_array()) throw InputError("'class_orders' must be an array");
    std::vector<Mark> orders;
    for (const auto& v : j["class_orders"]) orders.push_back(integer(v, "class order"));
    doc.class_orders = std::move(orders);
  }
  if (doc.marks.empty() || doc.marks.front().empty()) {
    throw InputError("table of marks has no rows");
  }
  if (order != doc.marks[0][0]) {
    throw InputError("'order' " + std::to_string(order) + " does not match marks[0][0] = " +
                     std::to_string(doc.marks[0][0]));
  }
  to_table(doc);
  return doc;
}

std::string write_json_tom(const TomDocument& doc)
{
  nlohmann::json j;
  if (doc.name) j["name"] = *doc.name;
  j["order"] = doc.marks.empty() || doc.marks[0].empty() ? 0 : doc.marks[0][0];
  j["marks"] = doc.marks;
  if (doc.class_orders) j["class_orders"] = *doc.class_orders;
  return j.dump();
}

// ---------------------------------------------------------------------------
// Results

std::string render_blocks(const std::vector<Block>& blocks)
{
  std::string out = "[";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ',';
    out += '[';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks[b][i] + 1);
    }
    out += ']';
  }
  return out + "]";
}

std::string render_ranks(const std::vector<Rank>& ranks)
{
  std::string out = "[";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ranks[i]);
  }
  return out + "]";
}

namespace {

std::string render_primes(const std::vector<std::uint64_t>& primes)
{
  std::string out = "[";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(primes[i]);
  }
  return out + "]";
}

// Ranks descending, each paired with its component (sorted), ties by the
// least class in the component.
void canonical_pairs(const GaloisInvariant& inv, std::vector<Rank>& ranks,
                     std::vector<Block>& components)
{
  std::vector<std::pair<Rank, Block>> pairs;
  for (std::size_t i = 0; i < inv.ranks.size(); ++i) {
    Block b = inv.components[i];
    std::sort(b.begin(), b.end());
    pairs.emplace_back(inv.ranks[i], std::move(b));
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (auto& [r, b] : pairs) {
    ranks.push_back(r);
    components.push_back(std::move(b));
  }
}

nlohmann::ordered_json step_json(const StepRecord& step)
{
  auto to_one_based = [](const std::vector<Block>& blocks) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& b : blocks) {
      auto& o = out.emplace_back();
      for (auto x : b) o.push_back(x + 1);
    }
    return out;
  };
  nlohmann::ordered_json j;
  j["class"] = step.index + 1;
  j["weyl_order"] = step.diagonal;
  j["primes"] = step.primes;
  j["prime_blocks"] = to_one_based(step.prime_blocks);
  j["glued"] = to_one_based(step.glued);
  j["rank"] = step.rank;
  j["L"] = step.ranks_after;
  j["C"] = to_one_based(step.components_after);
  j["chi_before"] = step.chi_before;
  j["chi_after"] = step.chi_after;
  return j;
}

}  // namespace

std::string emit_result(const GaloisInvariant& inv, const EmitOptions& options)
{
  std::vector<Rank> ranks;
  std::vector<Block> components;
  canonical_pairs(inv, ranks, components);

  if (options.mode == OutputMode::json) {
    nlohmann::ordered_json j;
    if (options.name) j["group"] = *options.name;
    j["L"] = ranks;
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& b : components) {
      auto& c = comps.emplace_back(nlohmann::ordered_json::array());
      for (auto x : b) c.push_back(x + 1);
    }
    j["components"] = comps;
    j["chi"] = inv.chi();
    if (options.method) j["method"] = *options.method;
    if (options.trace) {
      auto& t = j["trace"] = nlohmann::ordered_json::array();
      for (const auto& step : inv.trace) t.push_back(step_json(step));
    }
    return j.dump() + "\n";
  }

  std::ostringstream out;
  if (options.name) out << "group = " << *options.name << "\n";
  out << "L = " << render_ranks(ranks) << "\n";
  out << "components = " << render_blocks(components) << "\n";
  out << "chi = " << inv.chi() << "\n";
  if (options.method) out << "cyclic extensions = " << *options.method << "\n";
  if (options.trace) {
    for (std::size_t i = 0; i < inv.trace.size(); ++i) {
      const auto& s = inv.trace[i];
      out << "step " << (i + 1) << ": class=" << (s.index + 1) << " weyl=" << s.diagonal
          << " P=" << render_primes(s.primes) << " E=" << render_blocks(s.prime_blocks)
          << " I=" << render_blocks(s.glued) << " N=" << s.rank
          << " L=" << render_ranks(s.ranks_after) << " C=" << render_blocks(s.components_after)
          << " chi=" << s.chi_before << "->" << s.chi_after << "\n";
    }
  }
  return out.str();
}

}  // namespace burnside
