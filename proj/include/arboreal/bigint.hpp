#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arboreal {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(BigInt const &x) { return x.str(); }

inline BigInt factorial(std::uint32_t n)
{
  BigInt r = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline BigInt pow_big(BigInt base, std::uint64_t exp)
{
  BigInt r = 1;
  while (exp) {
    if (exp & 1u)
      r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

} // namespace arboreal
