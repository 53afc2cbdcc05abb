#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arboreal/bigint.hpp"

namespace arboreal {

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., degree-1} stored as its image list.
 *
 * Composition follows function application: `g * h` maps p to g(h(p)),
 * i.e. the right factor acts first.
 */
class Perm {
public:
  /// Identity of the given degree.
  explicit Perm(std::size_t degree = 1);

  /// From an image list; throws ArgumentError unless it is a bijection.
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images);

  /// Product of disjoint or overlapping cycles, applied right to left.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  /// Parses `[1,2,0]` (image list) or `(0 1 2)(3 4)` (cycle notation).
  /// Cycle notation needs the degree; image lists must match it if given.
  static Perm parse(std::string_view text, std::size_t degree = 0);

  /// No bijection check; for hot paths whose callers guarantee validity.
  static Perm unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point operator[](Point p) const { return images_[p]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Smallest moved point, or degree() for the identity.
  Point smallest_moved_point() const;

  std::vector<std::vector<Point>> cycles() const;

  std::string str() const;        ///< `[1,2,0]`
  std::string cycle_str() const;  ///< `(0 1 2)`, `()` for the identity

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &, Perm const &) = default;

private:
  std::vector<Point> images_;
};

enum class Parity { even, odd };

struct OrderAndParity {
  BigInt order;
  Parity parity;
};

/// p -> g(h(p)); throws ArgumentError on degree mismatch.
Perm compose(Perm const &g, Perm const &h);
inline Perm operator*(Perm const &g, Perm const &h) { return compose(g, h); }

Perm inverse(Perm const &g);
Perm power(Perm const &g, std::int64_t k);
Perm power(Perm const &g, BigInt const &k);

OrderAndParity order_and_parity(Perm const &g);

/// g * h == h * g
bool commutes(Perm const &g, Perm const &h);

/// Direct product action of g (on n points) and h (on m points) on n*m points,
/// pair (a, b) encoded as a*m + b.
Perm product_perm(Perm const &g, Perm const &h);

std::ostream &operator<<(std::ostream &os, Perm const &g);

/**
 * Non-commuting witness: for an even g != id with g(x) = x on at least five
 * points, returns the 3-cycle tau = (y g^-1(y) u) with tau(x) = x and
 * g*tau != tau*g. y is the smallest point moved by g and u the smallest
 * point outside {x, y, g(y), g^-1(y)}.
 */
Perm noncommuting_stabilizer_witness(std::size_t set_size, Perm const &g,
                                     Point x);

} // namespace arboreal

template <>
struct std::hash<arboreal::Perm> {
  std::size_t operator()(arboreal::Perm const &g) const noexcept;
};
