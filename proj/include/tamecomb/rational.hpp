#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tamecomb {

/// Exact rational arithmetic on int64 with overflow checks.  Levels and
/// tameness thresholds stay tiny, so 64 bits is plenty; the checks make
/// any violation loud instead of silent.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
               checked(__int128(a.den_) * b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num_, b.den_); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked(__int128(a.num_) * b.num_), checked(__int128(a.den_) * b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(checked(__int128(a.num_) * b.den_), checked(__int128(a.den_) * b.num_));
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// Smallest integer multiple of 1/grid_den that is >= *this.
  Rat ceil_to_grid(std::int64_t grid_den) const {
    __int128 n = __int128(num_) * grid_den;
    __int128 q = n / den_;
    if (n % den_ != 0 && n > 0) q += 1;
    return Rat(checked(q), grid_den);
  }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) q -= 1;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
  static std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
    return static_cast<std::int64_t>(v);
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace tamecomb
