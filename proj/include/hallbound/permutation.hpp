#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hallbound {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Products read left to right: (a * b)(x) = b(a(x)), i.e. apply a first.
/// Conjugation is x^g = g^-1 * x * g and the commutator is
/// [a, b] = a^-1 * b^-1 * a * b.
class Permutation {
 public:
  Permutation() = default;

  /// Throws PreconditionError unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles over 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;
  Permutation pow(std::int64_t k) const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const;

  /// Disjoint-cycle string with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend Permutation conjugate(const Permutation& x, const Permutation& g);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Left-to-right product; throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// x^g = g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);

/// [a,b] = a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
/// Whitespace-insensitive; commas between points are accepted.
Permutation parse_cycles(std::size_t degree, const std::string& text);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace hallbound
