#pragma once

// Monic univariate polynomials over Z: construction, parsing, formatting,
// power composition P(T^k), and exact discriminants.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polywit/bigint.hpp"
#include "polywit/modmath.hpp"

namespace polywit {

using Coeffs = std::vector<BigInt>;  // lowest degree first

struct PolyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace poly {

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline int degree(const Coeffs& c) { return (int)c.size() - 1; }

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Coeffs pow(Coeffs base, u64 e) {
  Coeffs r{BigInt(1)};
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

inline Coeffs derivative(const Coeffs& c) {
  Coeffs r;
  for (size_t i = 1; i < c.size(); ++i) r.push_back(BigInt(i) * c[i]);
  trim(r);
  return r;
}

inline BigInt eval(const Coeffs& c, const BigInt& x) {
  BigInt v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B, exact over Z.
inline Coeffs prem(Coeffs a, const Coeffs& b) {
  const int db = degree(b);
  const BigInt& lb = b.back();
  while (degree(a) >= db && !a.empty()) {
    const int da = degree(a);
    const BigInt q = a.back();
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    trim(a);
    if ((int)a.size() - 1 == da) throw std::logic_error("prem failed to reduce degree");
  }
  return a;
}

// Resultant over Z by the subresultant chain (Cohen, Alg. 3.3.7 without
// content extraction; inputs here are small enough not to need it).
inline BigInt resultant(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return (degree(a) == 0 || degree(b) == 0) ? BigInt(0) : BigInt(0);
  int s = 1;
  if (degree(a) < degree(b)) {
    if ((degree(a) & 1) && (degree(b) & 1)) s = -s;
    std::swap(a, b);
  }
  BigInt g = 1, h = 1;
  while (degree(b) > 0) {
    const int da = degree(a), db = degree(b);
    const int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    Coeffs r = prem(a, b);
    a = std::move(b);
    const BigInt divisor = g * big_pow(h, delta);
    for (auto& x : r) x /= divisor;
    b = std::move(r);
    g = a.back();
    // h = g^delta / h^(delta-1), exact
    h = delta == 0 ? h : big_pow(g, delta) / big_pow(h, delta - 1);
  }
  if (b.empty()) return 0;
  // b is a nonzero constant now
  const int da = degree(a);
  BigInt res = da == 0 ? BigInt(1) : big_pow(b[0], da) / big_pow(h, da - 1);
  return s * res;
}

inline u64 resultant_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto trim_m = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim_m(a);
  trim_m(b);
  u64 res = 1;
  bool neg = false;
  while (true) {
    if (b.empty()) return a.size() == 1 ? (neg ? p - res : res) % p : 0;
    if (b.size() == 1) {
      res = mul_mod(res, pow_mod(b[0], a.size() - 1, p), p);
      return (neg ? (p - res) % p : res);
    }
    const size_t da = a.size() - 1, db = b.size() - 1;
    // a mod b over F_p
    const u64 inv_lb = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const u64 q = mul_mod(a.back(), inv_lb, p);
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = sub_mod(a[shift + i], mul_mod(q, b[i], p), p);
      trim_m(a);
      if (a.empty()) break;
    }
    const size_t dr = a.empty() ? 0 : a.size() - 1;
    res = mul_mod(res, pow_mod(b.back(), da - dr, p), p);
    if ((da & 1) && (db & 1)) neg = !neg;
    std::swap(a, b);
  }
}

inline std::vector<u64> reduce_coeffs(const Coeffs& c, u64 p) {
  std::vector<u64> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = mod_to_u64(c[i], p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Squarefree over Q <=> Res(P, P') != 0. Decided exactly via modular
// resultants: one nonzero residue proves nonzero; enough zero residues
// (past the Hadamard bound on |Res|) prove zero.
inline bool squarefree_over_q(const Coeffs& c) {
  const int n = degree(c);
  if (n <= 1) return true;
  const Coeffs der = derivative(c);
  auto norm_bits = [](const Coeffs& v) {
    BigInt s = 0;
    for (const auto& x : v) s += x * x;
    return s == 0 ? 0.0 : 0.5 * big_log(s) / 0.6931471805599453;
  };
  const double bound_bits = (n - 1) * norm_bits(c) + n * norm_bits(der) + 2;
  double have_bits = 0;
  for (u64 p = 1009;; p += 2) {
    if (!is_prime_u64(p) || BigInt(n) % p == 0) continue;
    if (resultant_mod(reduce_coeffs(c, p), reduce_coeffs(der, p), p) != 0) return true;
    have_bits += std::log2((double)p);
    if (have_bits > bound_bits) return false;
  }
}

}  // namespace poly

// The paper-side polynomial P(T): monic, degree >= 1, integer coefficients.
// Immutable after construction; the squarefree flag is computed once.
class IntPoly {
 public:
  explicit IntPoly(Coeffs coeffs) : c_(std::move(coeffs)) {
    poly::trim(c_);
    if (c_.size() < 2) throw std::invalid_argument("IntPoly: degree must be >= 1");
    if (c_.back() != 1) throw std::invalid_argument("IntPoly: polynomial must be monic");
    squarefree_ = poly::squarefree_over_q(c_);
  }

  int degree() const { return poly::degree(c_); }
  const Coeffs& coeffs() const { return c_; }
  const BigInt& operator[](size_t i) const { return c_[i]; }
  bool squarefree() const { return squarefree_; }

  BigInt operator()(const BigInt& x) const { return poly::eval(c_, x); }
  BigInt at_zero() const { return c_[0]; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

 private:
  Coeffs c_;
  bool squarefree_ = false;
};

// P(T^k): coefficient i of P lands at position i*k.
inline IntPoly compose_power(const IntPoly& p, u64 k) {
  if (k == 0) throw std::invalid_argument("compose_power: k must be >= 1");
  if (k == 1) return p;
  Coeffs r((size_t)p.degree() * k + 1, BigInt(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) r[i * k] = p.coeffs()[i];
  return IntPoly(std::move(r));
}

// disc(P) = (-1)^(n(n-1)/2) Res(P, P') for monic P.
inline BigInt discriminant(const IntPoly& p) {
  const int n = p.degree();
  if (n == 1) return 1;
  BigInt res = poly::resultant(p.coeffs(), poly::derivative(p.coeffs()));
  return (n * (n - 1) / 2) % 2 ? -res : res;
}

// --- text syntax --------------------------------------------------------
//
// Accepted everywhere: a coefficient list "[c0, c1, ..., 1]" (lowest degree
// first) or an expression in the single variable T with integer
// coefficients, +, -, *, ^ and parentheses, e.g. "T^3 - 2", "(T-2)*(T-3)".

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Coeffs parse() {
    skip_ws();
    Coeffs r = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw PolyParseError("polynomial syntax error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Coeffs parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Coeffs acc = parse_term();
    if (neg)
      for (auto& x : acc) x = -x;
    while (true) {
      if (eat('+'))
        acc = poly::add(acc, parse_term());
      else if (eat('-'))
        acc = poly::sub(acc, parse_term());
      else
        break;
    }
    return acc;
  }

  Coeffs parse_term() {
    Coeffs acc = parse_factor();
    while (eat('*')) acc = poly::mul(acc, parse_factor());
    return acc;
  }

  Coeffs parse_factor() {
    Coeffs base = parse_primary();
    if (eat('^')) {
      skip_ws();
      u64 e = parse_uint();
      return poly::pow(std::move(base), e);
    }
    return base;
  }

  Coeffs parse_primary() {
    const char ch = peek();
    if (ch == '(') {
      eat('(');
      Coeffs inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (ch == 'T' || ch == 't') {
      ++pos_;
      return Coeffs{BigInt(0), BigInt(1)};
    }
    if (std::isdigit((unsigned char)ch)) return Coeffs{parse_int()};
    fail("expected '(', 'T' or an integer");
  }

  u64 parse_uint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("expected exponent");
    u64 v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  BigInt parse_int() {
    skip_ws();
    std::string digits;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) digits += s_[pos_++];
    if (digits.empty()) fail("expected integer");
    return BigInt(digits);
  }
};

inline Coeffs parse_coeff_list(std::string_view s) {
  size_t pos = s.find('[');
  size_t end = s.rfind(']');
  if (end == std::string_view::npos) throw PolyParseError("coefficient list: missing ']'");
  std::string body(s.substr(pos + 1, end - pos - 1));
  Coeffs out;
  std::string cur;
  auto flush = [&] {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw PolyParseError("coefficient list: empty entry");
    out.emplace_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (char ch : body) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  if (!cur.empty() || out.empty()) flush();
  return out;
}

}  // namespace detail

inline IntPoly parse_poly(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  if (i < text.size() && text[i] == '[') return IntPoly(detail::parse_coeff_list(text));
  return IntPoly(detail::PolyParser(text).parse());
}

// Canonical text form, descending powers; re-parses to the same polynomial.
inline std::string format_poly(const IntPoly& p) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const BigInt a = big_abs(c);
    if (a != 1 || i == 0) {
      out += a.str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "T";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace polywit
