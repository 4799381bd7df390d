#pragma once

#include <cstdint>
#include <string>

#include "trispline/error.hpp"

namespace trispline {

// Exact rational on 128-bit integers, always gcd-reduced with positive
// denominator.  Every arithmetic op is overflow-checked; exceeding the
// 128-bit range throws IntegerOverflow (the signal that a user-supplied
// perturbation polynomial is too large).
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  static Rational from_int128(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  double to_double() const;
  std::string to_string() const;

  // Throws IntegerOverflow when the reduced value does not fit in int64
  // (serialization boundary).
  std::int64_t num_i64() const;
  std::int64_t den_i64() const;

 private:
  Rational(Int n, Int d, bool reduced) : num_(n), den_(d) { (void)reduced; }
  void normalize();

  Int num_;
  Int den_;
};

}  // namespace trispline
