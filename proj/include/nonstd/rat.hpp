#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "nonstd/errors.hpp"

namespace nonstd {

// Exact rational number. Always canonical: denominator > 0, gcd(|num|, den) = 1.
// Arithmetic never rounds.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, lets integer literals flow in
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rat(mpz_class num, mpz_class den);

  // Accepts "p", "p/q", with optional leading sign. No whitespace, no decimals.
  static std::optional<Rat> try_parse(std::string_view text);
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat abs() const;
  Rat inv() const;  // throws ZeroDivision on zero
  Rat pow(long e) const;
  mpz_class floor() const;
  mpz_class ceil() const;

  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class q_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

// 2^-prec as an exact rational; the standard width target for enclosures.
Rat pow2(long e);

// C(n, k) as an exact rational (integer-valued).
Rat binomial(unsigned long n, unsigned long k);

}  // namespace nonstd
