#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cheb {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, acting on the right: x^(ab) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(DegreeMismatch) if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "(1,2,3)";
  /// "()" is the identity. Throws Error(ParseError).
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycles() const;

  /// Apply `a` first, then `b`.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace cheb
