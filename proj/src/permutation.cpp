#include "burnside/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "burnside/error.hpp"

namespace burnside {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.empty()) {
    throw InputError("permutation degree must be at least 1");
  }
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InputError("permutation images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<Point>& images)
{
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (auto x : images) {
    if (x == 0) {
      throw InputError("point 0 in 1-based permutation");
    }
    zero_based.push_back(x - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles)
{
  if (degree == 0) {
    throw InputError("permutation degree must be at least 1");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) {
        throw InputError("cycle point " + std::to_string(from) + " out of range 1.." +
                         std::to_string(degree));
      }
      if (moved[from - 1]) {
        throw InputError("point " + std::to_string(from) + " appears twice in cycles");
      }
      moved[from - 1] = true;
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(inv), Unchecked{});
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i]) continue;
    std::size_t len = 0;
    for (auto x = static_cast<Point>(i); !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const
{
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (auto x = static_cast<Point>(i); !done[x]; x = images_[x]) {
      done[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.degree() != q.degree()) {
    throw InputError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                     " and " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = p.images_[q.images_[x]];
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

namespace {

// Cycles as written, plus the largest point seen.
struct ParsedCycles {
  std::vector<std::vector<Point>> cycles;
  Point max_point = 0;
};

ParsedCycles parse_cycle_list(std::string_view text, std::size_t base_offset)
{
  ParsedCycles parsed;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_space();
  if (i == text.size()) {
    throw ParseError("empty permutation", base_offset);
  }
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '('", base_offset + i);
    }
    ++i;
    std::vector<Point> cycle;
    bool expect_point = true;
    for (;;) {
      skip_space();
      if (i == text.size()) {
        throw ParseError("unterminated cycle", base_offset + i);
      }
      char ch = text[i];
      if (ch == ')') {
        if (!cycle.empty() && expect_point) {
          throw ParseError("dangling ','", base_offset + i);
        }
        ++i;
        break;
      }
      if (ch == ',') {
        if (expect_point) throw ParseError("unexpected ','", base_offset + i);
        expect_point = true;
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError(std::string("unexpected character '") + ch + "'", base_offset + i);
      }
      std::uint64_t value = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 1'000'000) throw ParseError("point too large", base_offset + start);
        ++i;
      }
      if (value == 0) throw ParseError("points are numbered from 1", base_offset + start);
      cycle.push_back(static_cast<Point>(value));
      parsed.max_point = std::max(parsed.max_point, static_cast<Point>(value));
      expect_point = false;
    }
    if (!cycle.empty()) parsed.cycles.push_back(std::move(cycle));
    skip_space();
  }
  return parsed;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  auto parsed = parse_cycle_list(text, 0);
  if (degree == 0) degree = std::max<std::size_t>(parsed.max_point, 1);
  if (parsed.max_point > degree) {
    throw InputError("point " + std::to_string(parsed.max_point) + " exceeds degree " +
                     std::to_string(degree));
  }
  return Permutation::from_cycles(degree, parsed.cycles);
}

std::vector<Permutation> parse_generator_file(std::string_view text)
{
  std::vector<ParsedCycles> lines;
  Point max_point = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) {
      lines.push_back(parse_cycle_list(line, offset));
      max_point = std::max(max_point, lines.back().max_point);
    }
    offset = end + 1;
  }
  if (lines.empty()) {
    throw InputError("generator file contains no permutations");
  }
  std::size_t degree = std::max<Point>(max_point, 1);
  std::vector<Permutation> perms;
  perms.reserve(lines.size());
  for (const auto& l : lines) perms.push_back(Permutation::from_cycles(degree, l.cycles));
  return perms;
}

}  // namespace burnside
