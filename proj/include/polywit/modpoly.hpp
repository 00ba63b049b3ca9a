#pragma once

// Polynomial arithmetic over F_p for machine-width primes p < 2^62,
// and the root-existence predicate behind "prime divisor of P(T)".

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polywit/intpoly.hpp"
#include "polywit/modmath.hpp"

namespace polywit {

// Residue coefficients, lowest degree first, no leading zeros.
// The zero polynomial has an empty coefficient vector.
struct ModPoly {
  u64 p = 0;
  std::vector<u64> c;

  int degree() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }
};

namespace modp {

inline void trim(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline u64 eval(const ModPoly& q, u64 x) {
  u64 v = 0;
  for (size_t i = q.c.size(); i-- > 0;) v = add_mod(mul_mod(v, x, q.p), q.c[i], q.p);
  return v;
}

inline ModPoly mul(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return {a.p, {}};
  std::vector<u64> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r[i + j] = add_mod(r[i + j], mul_mod(a.c[i], b.c[j], a.p), a.p);
  return {a.p, std::move(r)};
}

inline ModPoly rem(ModPoly a, const ModPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly rem: division by zero polynomial");
  const u64 p = b.p;
  const u64 inv_lb = inv_mod(b.c.back(), p);
  while (a.c.size() >= b.c.size()) {
    const u64 q = mul_mod(a.c.back(), inv_lb, p);
    const size_t shift = a.c.size() - b.c.size();
    for (size_t i = 0; i < b.c.size(); ++i)
      a.c[shift + i] = sub_mod(a.c[shift + i], mul_mod(q, b.c[i], p), p);
    trim(a.c);
  }
  return a;
}

inline ModPoly make_monic(ModPoly a) {
  if (a.is_zero() || a.c.back() == 1) return a;
  const u64 inv = inv_mod(a.c.back(), a.p);
  for (auto& x : a.c) x = mul_mod(x, inv, a.p);
  return a;
}

// T^e mod q by square and multiply.
inline ModPoly pow_x_mod(u64 e, const ModPoly& q) {
  ModPoly result{q.p, {1}};
  ModPoly base = rem(ModPoly{q.p, {0, 1}}, q);
  while (e) {
    if (e & 1) result = rem(mul(result, base), q);
    base = rem(mul(base, base), q);
    e >>= 1;
  }
  return result;
}

}  // namespace modp

inline ModPoly reduce_mod(const IntPoly& poly, u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("reduce_mod: modulus must be prime");
  ModPoly q{p, {}};
  q.c.resize(poly.coeffs().size());
  for (size_t i = 0; i < q.c.size(); ++i) q.c[i] = mod_to_u64(poly.coeffs()[i], p);
  modp::trim(q.c);
  return q;
}

// Monic gcd in F_p[T].
inline ModPoly poly_gcd_mod(ModPoly a, ModPoly b) {
  if (a.p != b.p) throw std::invalid_argument("poly_gcd_mod: mismatched primes");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd_mod: gcd(0, 0)");
  while (!b.is_zero()) {
    ModPoly r = modp::rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return modp::make_monic(std::move(a));
}

inline constexpr u64 default_root_scan_threshold = u64(1) << 16;

// True iff q has a root in F_p. Exhaustive evaluation for small p;
// otherwise deg gcd(T^p - T, q) >= 1, since T^p - T is the product of
// (T - a) over all a in F_p.
inline bool has_root_mod(const ModPoly& q, u64 exhaustive_threshold = default_root_scan_threshold) {
  if (q.is_zero()) throw std::invalid_argument("has_root_mod: zero polynomial");
  if (q.degree() == 0) return false;
  if (q.p < exhaustive_threshold) {
    for (u64 x = 0; x < q.p; ++x)
      if (modp::eval(q, x) == 0) return true;
    return false;
  }
  ModPoly xp = modp::pow_x_mod(q.p, q);
  // xp - T
  std::vector<u64> diff = xp.c;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = sub_mod(diff[1], 1, q.p);
  modp::trim(diff);
  ModPoly g = ModPoly{q.p, std::move(diff)};
  if (g.is_zero()) return true;  // T^p - T divisible by q: every residue is a root
  return poly_gcd_mod(std::move(g), q).degree() >= 1;
}

}  // namespace polywit
