#pragma once

// Exact k-th-power tests over Q, Capelli irreducibility of T^k - t,
// logarithmic Weil heights, and the effective Northcott bound.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polywit/bigint.hpp"
#include "polywit/modmath.hpp"

namespace polywit {

struct ZeroValueError : std::domain_error {
  ZeroValueError() : std::domain_error("value must be nonzero") {}
};
struct RootOfUnityError : std::domain_error {
  RootOfUnityError() : std::domain_error("value is a root of unity (+1 or -1 in Q)") {}
};

// Canonical fraction: den > 0, gcd(num, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_unit() const { return den_ == 1 && (num_ == 1 || num_ == -1); }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw ZeroValueError();
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

  Rational pow(unsigned k) const { return Rational(big_pow(num_, k), big_pow(den_, k)); }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = big_gcd(big_abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
};

inline Rational parse_rational(std::string_view s) {
  const size_t slash = s.find('/');
  auto strip = [](std::string_view v) {
    size_t a = v.find_first_not_of(" \t");
    size_t b = v.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw std::invalid_argument("empty rational");
    return std::string(v.substr(a, b - a + 1));
  };
  if (slash == std::string_view::npos) return Rational(BigInt(strip(s)));
  return Rational(BigInt(strip(s.substr(0, slash))), BigInt(strip(s.substr(slash + 1))));
}

// h(a/b) = log max(|a|, b) in lowest terms. The exact integer form is kept
// alongside so bounds never compare floating-point values.
struct HeightValue {
  double value = 0.0;
  BigInt exact_form;
};

inline HeightValue weil_height(const Rational& t) {
  BigInt m = std::max(big_abs(t.num()), t.den());
  if (m == 0) m = 1;  // h(0) = 0
  return HeightValue{big_log(m), std::move(m)};
}

// The rational x with x^k = t, if it exists.
inline std::optional<Rational> kth_power_test(const Rational& t, u64 k) {
  if (k == 0) throw std::invalid_argument("kth_power_test: k must be >= 1");
  if (k == 1 || t.is_zero()) return t;
  if (t.is_unit()) return (t.num() == 1 || k % 2) ? std::optional<Rational>(t) : std::nullopt;
  if (t.sign() < 0 && k % 2 == 0) return std::nullopt;
  // x^k = t with x outside {0, +1, -1} forces max(|num|, den) >= 2^k;
  // no representable t reaches that once k needs more than 32 bits.
  if (k >= (u64(1) << 32)) return std::nullopt;
  const BigInt rn = kth_root_floor(big_abs(t.num()), (unsigned)k);
  if (big_pow(rn, (unsigned)k) != big_abs(t.num())) return std::nullopt;
  const BigInt rd = kth_root_floor(t.den(), (unsigned)k);
  if (big_pow(rd, (unsigned)k) != t.den()) return std::nullopt;
  return Rational(t.sign() < 0 ? -rn : rn, rd);
}

// B = floor(h(t) / log 2): for every k > B, t is not a k-th power in Q,
// because any rational outside {0, +1, -1} has height >= log 2.
inline u64 power_bound(const Rational& t) {
  if (t.is_zero()) throw ZeroValueError();
  if (t.is_unit()) throw RootOfUnityError();
  return floor_log2(weil_height(t).exact_form);
}

// Capelli: T^k - t is irreducible over Q iff t is not a p-th power for any
// prime p | k and, when 4 | k, t is not of the form -4 c^4.
inline bool capelli_irreducible(const Rational& t, u64 k) {
  if (t.is_zero()) throw ZeroValueError();
  if (k == 0) throw std::invalid_argument("capelli_irreducible: k must be >= 1");
  if (k == 1) return true;
  for (u64 p : distinct_prime_factors(k))
    if (kth_power_test(t, p)) return false;
  if (k % 4 == 0 && kth_power_test(-t / Rational(4), 4)) return false;
  return true;
}

// Smallest prime k1 > max(power_bound(t), degree_bound). Beyond the power
// bound T^k1 - t is irreducible over Q; exceeding the degree bound keeps a
// margin over the ambient splitting field.
inline u64 minimal_irreducible_prime(const Rational& t, u64 degree_bound) {
  const u64 floor = std::max(power_bound(t), degree_bound);
  u64 k = floor + 1;
  while (!is_prime_u64(k)) ++k;
  return k;
}

}  // namespace polywit
