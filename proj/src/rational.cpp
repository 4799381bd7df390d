#include "trispline/rational.hpp"

#include <limits>

namespace trispline {

namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw IntegerOverflow("rational arithmetic exceeds 128-bit range");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw IntegerOverflow("rational arithmetic exceeds 128-bit range");
  return r;
}

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min())
    throw IntegerOverflow("rational arithmetic exceeds 128-bit range");
  return -a;
}

Int gcd128(Int a, Int b) {
  UInt x = a < 0 ? UInt(0) - UInt(a) : UInt(a);
  UInt y = b < 0 ? UInt(0) - UInt(b) : UInt(b);
  while (y != 0) {
    UInt t = x % y;
    x = y;
    y = t;
  }
  return Int(x);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw Error("rational with zero denominator");
  normalize();
}

Rational Rational::from_int128(Int n, Int d) {
  if (d == 0) throw Error("rational with zero denominator");
  Rational r(n, d, true);
  r.normalize();
  return r;
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const Int g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  return Rational(checked_neg(num_), den_, true);
}

Rational Rational::operator+(const Rational& o) const {
  // reduce cross terms first to delay overflow
  const Int g = gcd128(den_, o.den_);
  const Int d1 = den_ / g;
  const Int d2 = o.den_ / g;
  const Int n = checked_add(checked_mul(num_, d2), checked_mul(o.num_, d1));
  const Int d = checked_mul(checked_mul(d1, d2), g);
  return from_int128(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  const Int g1 = gcd128(num_, o.den_);
  const Int g2 = gcd128(o.num_, den_);
  const Int n = checked_mul(num_ / g1, o.num_ / g2);
  const Int d = checked_mul(den_ / g2, o.den_ / g1);
  return from_int128(n, d);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error("rational division by zero");
  return *this * Rational(o.den_, o.num_, true);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  const auto render = [](Int v) {
    if (v == 0) return std::string("0");
    std::string s;
    UInt u = v < 0 ? UInt(0) - UInt(v) : UInt(v);
    while (u != 0) {
      s.insert(s.begin(), char('0' + int(u % 10)));
      u /= 10;
    }
    if (v < 0) s.insert(s.begin(), '-');
    return s;
  };
  if (den_ == 1) return render(num_);
  return render(num_) + "/" + render(den_);
}

std::int64_t Rational::num_i64() const {
  if (num_ > std::numeric_limits<std::int64_t>::max() ||
      num_ < std::numeric_limits<std::int64_t>::min())
    throw IntegerOverflow("rational numerator exceeds int64 range");
  return static_cast<std::int64_t>(num_);
}

std::int64_t Rational::den_i64() const {
  if (den_ > std::numeric_limits<std::int64_t>::max())
    throw IntegerOverflow("rational denominator exceeds int64 range");
  return static_cast<std::int64_t>(den_);
}

}  // namespace trispline
