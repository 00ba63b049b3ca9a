#pragma once

// Machine-width modular arithmetic and prime enumeration.
//
// All moduli are < 2^62 so that products fit in unsigned __int128 and
// sums of two residues never wrap a uint64_t.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polywit {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 max_prime_bound = u64(1) << 62;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Inverse mod prime p via Fermat.
inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return add_mod(mul_mod(x, x, n), c, n); };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = detail::pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace detail

// Prime factorization of n, sorted, with multiplicity.
inline std::vector<u64> factor_u64(u64 n) {
  std::vector<u64> out;
  for (u64 p : {2ull, 3ull, 5ull})
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  detail::factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
  auto f = factor_u64(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// Euler phi.
inline u64 totient_u64(u64 n) {
  u64 r = n;
  for (u64 p : distinct_prime_factors(n)) r = r / p * (p - 1);
  return r;
}

// Simple sieve of Eratosthenes up to limit (exclusive).
inline std::vector<u64> simple_sieve(u64 limit) {
  std::vector<u64> primes;
  if (limit <= 2) return primes;
  std::vector<char> comp(limit, 0);
  for (u64 i = 2; i < limit; ++i) {
    if (comp[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j < limit; j += i) comp[j] = 1;
  }
  return primes;
}

namespace detail {

inline u64 isqrt_u64(u64 n) {
  u64 r = (u64)std::sqrt((double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

// Segmented sieve over [lo, hi): calls fn(p) for each prime in increasing
// order. Segmentation is invisible to the caller.
inline void for_primes(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
  if (hi > max_prime_bound) throw std::invalid_argument("prime range exceeds 2^62");
  if (lo < 2) lo = 2;
  if (lo >= hi) return;
  const u64 root = detail::isqrt_u64(hi - 1);
  const std::vector<u64> base = simple_sieve(root + 1);
  constexpr u64 segment = 1 << 18;
  std::vector<char> comp(segment);
  for (u64 low = lo; low < hi; low += segment) {
    const u64 high = std::min(low + segment, hi);
    std::fill(comp.begin(), comp.begin() + (high - low), 0);
    for (u64 p : base) {
      if (p * p >= high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j < high; j += p) comp[j - low] = 1;
    }
    for (u64 n = low; n < high; ++n)
      if (!comp[n - low]) fn(n);
  }
}

// All primes in [lo, hi) in increasing order.
inline std::vector<u64> prime_stream(u64 lo, u64 hi) {
  std::vector<u64> out;
  for_primes(lo, hi, [&](u64 p) { out.push_back(p); });
  return out;
}

}  // namespace polywit
