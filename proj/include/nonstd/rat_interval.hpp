#pragma once

#include <string>

#include "nonstd/rat.hpp"

namespace nonstd {

// Closed rational interval [lo, hi]. All arithmetic is exact and satisfies
// the containment contract: u in A and v in B implies u op v in (A op B).
class RatInterval {
 public:
  RatInterval() : lo_(0), hi_(0) {}
  RatInterval(Rat lo, Rat hi);
  static RatInterval point(Rat v) { return RatInterval(v, v); }
  static RatInterval hull(const RatInterval& a, const RatInterval& b);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat mid() const { return (lo_ + hi_) / Rat(2); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return hi_.sign() < 0; }

  RatInterval abs() const;
  RatInterval inv() const;  // throws DivisorStraddlesZero if 0 inside
  RatInterval pow_int(long e) const;
  RatInterval widened(const Rat& margin) const;  // [lo - margin, hi + margin]

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a);
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  std::string str() const;  // "[lo, hi]"

 private:
  Rat lo_, hi_;
};

}  // namespace nonstd
