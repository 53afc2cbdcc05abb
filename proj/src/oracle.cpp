#include "arboreal/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "arboreal/error.hpp"

namespace arboreal {

std::uint64_t max_enum()
{
  if (char const *s = std::getenv("ARBOREAL_MAX_ENUM")) {
    try {
      std::size_t used = 0;
      unsigned long long const v = std::stoull(s, &used);
      if (used == std::string(s).size() && v > 0)
        return v;
    } catch (std::exception const &) {
    }
    throw ArgumentError("ARBOREAL_MAX_ENUM must be a positive integer");
  }
  return std::uint64_t{1} << 20;
}

EnumeratedGroup::EnumeratedGroup(std::size_t degree, std::span<Perm const> generators,
                                 std::uint64_t cap)
: degree_(degree)
{
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw ArgumentError("EnumeratedGroup: generator has the wrong degree");
  std::unordered_set<Perm> seen;
  std::deque<Perm> queue;
  Perm const id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm const cur = std::move(queue.front());
    queue.pop_front();
    for (auto const &s : generators) {
      Perm next = s * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw BudgetExceeded("EnumeratedGroup: more than " + std::to_string(cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  std::sort(elements_.begin(), elements_.end());
}

bool EnumeratedGroup::contains(Perm const &g) const
{
  return g.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

std::vector<Perm> EnumeratedGroup::pointwise_stabilizer(std::span<Point const> points) const
{
  std::vector<Perm> out;
  for (auto const &g : elements_)
    if (std::all_of(points.begin(), points.end(), [&](Point p) { return g(p) == p; }))
      out.push_back(g);
  return out;
}

std::vector<Perm> EnumeratedGroup::centralizing(std::span<Perm const> subset,
                                                std::span<Perm const> with)
{
  std::vector<Perm> out;
  for (auto const &g : subset)
    if (std::all_of(with.begin(), with.end(), [&](Perm const &h) { return commutes(g, h); }))
      out.push_back(g);
  return out;
}

} // namespace arboreal
