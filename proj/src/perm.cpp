#include "arboreal/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "arboreal/error.hpp"

namespace arboreal {

namespace {

void check_bijection(std::vector<Point> const &images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      throw ArgumentError("image list is not a bijection");
    seen[p] = true;
  }
}

std::vector<Point> parse_numbers(std::string_view text)
{
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffu)
          throw ArgumentError("point out of range");
        ++i;
      }
      out.push_back(static_cast<Point>(v));
    } else if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      throw ArgumentError("unexpected character in permutation text");
    }
  }
  return out;
}

} // namespace

Perm::Perm(std::size_t degree)
: images_(degree)
{
  if (degree == 0)
    throw ArgumentError("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images)
: images_(std::move(images))
{
  if (images_.empty())
    throw ArgumentError("permutation degree must be positive");
  check_bijection(images_);
}

Perm::Perm(std::initializer_list<Point> images)
: Perm(std::vector<Point>(images))
{}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  Perm result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    auto const &cycle = *it;
    std::vector<bool> seen(degree, false);
    for (Point p : cycle) {
      if (p >= degree)
        throw ArgumentError("cycle point out of range");
      if (seen[p])
        throw ArgumentError("repeated point in cycle");
      seen[p] = true;
    }
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = Perm(std::move(img)) * result;
  }
  return result;
}

Perm Perm::parse(std::string_view text, std::size_t degree)
{
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw ArgumentError("empty permutation text");
  text.remove_prefix(first);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (text.front() == '[') {
    if (text.back() != ']')
      throw ArgumentError("unterminated image list");
    Perm g(parse_numbers(text.substr(1, text.size() - 2)));
    if (degree != 0 && g.degree() != degree)
      throw ArgumentError("image list has wrong degree");
    return g;
  }

  if (text.front() != '(')
    throw ArgumentError("permutation must start with '[' or '('");
  if (degree == 0)
    throw ArgumentError("cycle notation requires a degree");

  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ArgumentError("malformed cycle notation");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ArgumentError("unterminated cycle");
    auto pts = parse_numbers(text.substr(i + 1, close - i - 1));
    if (!pts.empty())
      cycles.push_back(std::move(pts));
    i = close + 1;
  }
  return from_cycles(degree, cycles);
}

Perm Perm::unchecked(std::vector<Point> images)
{
  Perm r;
  r.images_ = std::move(images);
  return r;
}

bool Perm::is_identity() const
{
  for (Point p = 0; p < images_.size(); ++p)
    if (images_[p] != p)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (Point p = 0; p < images_.size(); ++p)
    inv[images_[p]] = p;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

Point Perm::smallest_moved_point() const
{
  for (Point p = 0; p < images_.size(); ++p)
    if (images_[p] != p)
      return p;
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point p = 0; p < images_.size(); ++p) {
    if (seen[p] || images_[p] == p)
      continue;
    std::vector<Point> cycle;
    for (Point q = p; !seen[q]; q = images_[q]) {
      seen[q] = true;
      cycle.push_back(q);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::str() const
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i)
    os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

std::string Perm::cycle_str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Perm compose(Perm const &g, Perm const &h)
{
  if (g.degree() != h.degree())
    throw ArgumentError("degree mismatch in compose");
  std::vector<Point> img(g.degree());
  for (Point p = 0; p < img.size(); ++p)
    img[p] = g(h(p));
  return Perm::unchecked(std::move(img));
}

Perm inverse(Perm const &g) { return g.inverse(); }

Perm power(Perm const &g, std::int64_t k)
{
  Perm base = k < 0 ? g.inverse() : g;
  // careful with INT64_MIN
  std::uint64_t e = k < 0 ? std::uint64_t(-(k + 1)) + 1 : std::uint64_t(k);
  Perm result(g.degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Perm power(Perm const &g, BigInt const &k)
{
  BigInt ord = order_and_parity(g).order;
  BigInt r = k % ord;
  if (r < 0)
    r += ord;
  return power(g, static_cast<std::int64_t>(r));
}

OrderAndParity order_and_parity(Perm const &g)
{
  BigInt order = 1;
  std::size_t transpositions = 0;
  for (auto const &c : g.cycles()) {
    BigInt len = c.size();
    order = order / boost::multiprecision::gcd(order, len) * len;
    transpositions += c.size() - 1;
  }
  return {order, transpositions % 2 == 0 ? Parity::even : Parity::odd};
}

bool commutes(Perm const &g, Perm const &h)
{
  if (g.degree() != h.degree())
    throw ArgumentError("degree mismatch in commutes");
  for (Point p = 0; p < g.degree(); ++p)
    if (g(h(p)) != h(g(p)))
      return false;
  return true;
}

Perm product_perm(Perm const &g, Perm const &h)
{
  auto const m = static_cast<Point>(h.degree());
  std::vector<Point> img(g.degree() * h.degree());
  for (Point a = 0; a < g.degree(); ++a)
    for (Point b = 0; b < m; ++b)
      img[a * m + b] = g(a) * m + h(b);
  return Perm(std::move(img));
}

std::ostream &operator<<(std::ostream &os, Perm const &g) { return os << g.str(); }

Perm noncommuting_stabilizer_witness(std::size_t set_size, Perm const &g,
                                     Point x)
{
  if (g.degree() != set_size)
    throw ArgumentError("witness: permutation degree differs from set size");
  if (set_size < 5)
    throw ArgumentError("witness: needs at least five points");
  if (x >= set_size)
    throw ArgumentError("witness: point out of range");
  if (g.is_identity())
    throw ArgumentError("witness: g is the identity");
  if (g(x) != x)
    throw ArgumentError("witness: g does not fix x");
  if (order_and_parity(g).parity != Parity::even)
    throw ArgumentError("witness: g is not even");

  Point const y = g.smallest_moved_point();
  Point const gy = g(y);
  Point y_pre = 0;
  for (Point p = 0; p < set_size; ++p)
    if (g(p) == y)
      y_pre = p;

  Point u = 0;
  while (u == x || u == y || u == gy || u == y_pre)
    ++u;

  Perm tau = Perm::from_cycles(set_size, {{y, y_pre, u}});
  if (tau(x) != x || commutes(g, tau))
    throw CertificationError("witness: construction failed to certify");
  return tau;
}

} // namespace arboreal

std::size_t std::hash<arboreal::Perm>::operator()(arboreal::Perm const &g) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto p : g.images()) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}
