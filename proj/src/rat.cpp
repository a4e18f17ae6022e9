#include "nonstd/rat.hpp"

#include <cctype>
#include <ostream>

namespace nonstd {

Rat::Rat(long num, long den) : q_(num, den) {
  if (den == 0) throw ZeroDivision("rational with zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpz_class num, mpz_class den) : q_(std::move(num), std::move(den)) {
  if (sgn(q_.get_den()) == 0) throw ZeroDivision("rational with zero denominator");
  q_.canonicalize();
}

std::optional<Rat> Rat::try_parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num(text.substr(0, i));
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den.assign(text.substr(den_begin));
  }
  mpz_class n(num), d(den);
  if (sgn(d) == 0) return std::nullopt;
  return Rat(std::move(n), std::move(d));
}

Rat Rat::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw Error("not a rational literal: '" + std::string(text) + "'");
  return *r;
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inv() const {
  if (is_zero()) throw ZeroDivision();
  return Rat(mpq_class(1 / q_));
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  const Rat base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.q_.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.q_.get_den_mpz_t(), n);
  return Rat(std::move(num), std::move(den));
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) { q_ += o.q_; return *this; }
Rat& Rat::operator-=(const Rat& o) { q_ -= o.q_; return *this; }
Rat& Rat::operator*=(const Rat& o) { q_ *= o.q_; return *this; }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ZeroDivision();
  q_ /= o.q_;
  return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw ZeroDivision();
  return Rat(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow2(long e) { return Rat(2).pow(e); }

Rat binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rat(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(std::move(r), mpz_class(1));
}

}  // namespace nonstd
