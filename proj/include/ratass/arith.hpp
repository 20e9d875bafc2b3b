#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratass/error.hpp"

namespace ratass {

using Wide = boost::multiprecision::uint128_t;

/// Size guards shared by the enumerating builders.
struct Limits {
  std::uint64_t max_paths = 10'000'000;  // bound on C(a+b, a)
  std::uint64_t max_faces = 10'000'000;
  int max_b = 14;
};

/// Throws unless 0 < a < b and gcd(a, b) = 1.
inline void require_coprime_pair(int a, int b) {
  if (a <= 0 || b <= 0 || a >= b)
    throw Error(ErrorKind::BadOrder, "need 0 < a < b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  if (std::gcd(a, b) != 1)
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
}

inline bool is_coprime_pair(int a, int b) { return a > 0 && a < b && std::gcd(a, b) == 1; }

/// Exact binomial coefficient; throws Overflow past 64 bits. C(n, k) = 0 for
/// k outside [0, n].
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Wide acc = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    // acc * (n - k + t) / t stays integral at every step
    acc = acc * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorKind::Overflow, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// numerator / denominator, throwing NonIntegral when the division is inexact.
inline std::uint64_t exact_divide(const Wide& numerator, std::uint64_t denominator, const char* what) {
  if (denominator == 0 || numerator % denominator != 0)
    throw Error(ErrorKind::NonIntegral, std::string(what) + " is not an integer");
  Wide q = numerator / denominator;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::Overflow, std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

}  // namespace ratass
