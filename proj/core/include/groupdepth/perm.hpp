#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace groupdepth {

/// A permutation of {0,...,degree-1}, stored as its image vector.
///
/// Composition is left-to-right: (a * b)(x) = b(a(x)), i.e. a acts first.
class Permutation {
public:
  using Point = std::uint16_t;

  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(unsigned degree);

  /// From an explicit image vector; validated to be a bijection.
  explicit Permutation(std::vector<Point> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](unsigned x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation &rhs) const;
  Permutation &operator*=(const Permutation &rhs);
  Permutation inverse() const;

  /// this^g = g^-1 * this * g.
  Permutation conjugated_by(const Permutation &g) const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Cycle lengths >= 2, sorted descending. Equal cycle types are a
  /// necessary condition for conjugacy in the ambient symmetric group.
  std::vector<unsigned> cycle_type() const;

  /// Sign: +1 even, -1 odd.
  int sign() const;

  /// Extend the domain with fixed points up to `degree`.
  Permutation extended(unsigned degree) const;

  bool operator==(const Permutation &rhs) const { return images_ == rhs.images_; }
  std::strong_ordering operator<=>(const Permutation &rhs) const {
    return images_ <=> rhs.images_;
  }

  /// Parse disjoint-cycle notation with 1-based points, e.g. "(1,2)(3,4)".
  /// "()" and "id" denote the identity.
  static Permutation parse_cycles(const std::string &text, unsigned degree);

  /// Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string cycle_string() const;

private:
  std::vector<Point> images_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

} // namespace groupdepth

template <> struct std::hash<groupdepth::Permutation> {
  std::size_t operator()(const groupdepth::Permutation &p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : p.images())
      h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};
