#pragma once

// Exact arbitrary-precision integers (boost cpp_int) plus the few
// helpers the rest of the library needs on top of them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "polywit/modmath.hpp"

namespace polywit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// floor(log2 x) for x >= 1; this is exact, unlike a double round trip.
inline unsigned floor_log2(const BigInt& x) {
  if (x < 1) throw std::domain_error("floor_log2 requires x >= 1");
  return boost::multiprecision::msb(x);
}

// Natural log of a positive BigInt, good to double precision.
inline double big_log(const BigInt& x) {
  if (x <= 0) throw std::domain_error("big_log requires x > 0");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits <= 52) return std::log(x.convert_to<double>());
  const BigInt top = x >> (bits - 52);
  return std::log(top.convert_to<double>()) + (double)(bits - 52) * 0.6931471805599453;
}

// Largest r with r^k <= x, for x >= 0, k >= 1.
inline BigInt kth_root_floor(const BigInt& x, unsigned k) {
  if (x < 0) throw std::domain_error("kth_root_floor requires x >= 0");
  if (k == 0) throw std::domain_error("kth_root_floor requires k >= 1");
  if (x <= 1 || k == 1) return x;
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  BigInt r = BigInt(1) << (bits / k + 1);  // r^k > x
  // Newton iteration, monotone from above.
  while (true) {
    BigInt next = ((k - 1) * r + x / big_pow(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (big_pow(r, k) > x) --r;
  return r;
}

inline u64 mod_to_u64(const BigInt& x, u64 p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

inline bool divides(u64 p, const BigInt& x) { return x % p == 0; }

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace polywit
