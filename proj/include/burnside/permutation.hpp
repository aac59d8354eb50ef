#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Text forms use 1-based points.
class Permutation {
 public:
  /// Throws InputError unless `images` is a bijection of {0..n-1}, n >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from 1-based images, e.g. {2, 1, 3} for (1,2) on three points.
  static Permutation from_one_based(const std::vector<Point>& images);

  /// Builds from disjoint cycles of 1-based points on `degree` points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  /// Disjoint cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
  {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation& p, const Permutation& q);
};

/// (p o q)(x) = p(q(x)). Throws InputError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q)
{
  return compose(p, q);
}

/// Parses one permutation in cycle notation, e.g. "(1,2)(3,4,5)" or "()".
/// Points may be separated by commas or whitespace. With `degree` zero the
/// degree is the largest point mentioned (at least 1).
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);

/// Parses a generator file: one permutation per line, blank lines and
/// '#' comments ignored. All permutations get the degree of the largest
/// point mentioned anywhere in the file.
std::vector<Permutation> parse_generator_file(std::string_view text);

}  // namespace burnside

template <>
struct std::hash<burnside::Permutation> {
  std::size_t operator()(const burnside::Permutation& p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};
