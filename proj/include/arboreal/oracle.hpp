#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arboreal/perm.hpp"

namespace arboreal {

/// Enumeration cap from ARBOREAL_MAX_ENUM, default 2^20.
std::uint64_t max_enum();

/**
 * A permutation group held as the explicit sorted list of its elements,
 * closed under the generators by breadth-first search. Shares no code with
 * the stabilizer-chain engine, so it serves as an independent check.
 */
class EnumeratedGroup {
public:
  /// Throws BudgetExceeded once more than `cap` elements are found.
  EnumeratedGroup(std::size_t degree, std::span<Perm const> generators,
                  std::uint64_t cap = max_enum());

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  std::vector<Perm> const &elements() const { return elements_; }
  bool contains(Perm const &g) const;

  /// Elements fixing every listed point.
  std::vector<Perm> pointwise_stabilizer(std::span<Point const> points) const;

  /// Elements of `subset` commuting with every permutation in `with`.
  static std::vector<Perm> centralizing(std::span<Perm const> subset, std::span<Perm const> with);

private:
  std::size_t degree_;
  std::vector<Perm> elements_;
};

} // namespace arboreal
