#include "orbihall/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "orbihall/error.hpp"

namespace orbihall {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "rational arithmetic exceeded 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(i128 n, i128 d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(int_type n, int_type d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  i128 nn = n;
  i128 dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  if (nn == 0) dd = 1;
  num_ = narrow(nn);
  den_ = narrow(dd);
}

Rational::int_type Rational::floor() const noexcept { return floor_div(num_, den_); }

Rational::int_type Rational::ceil() const noexcept { return -floor_div(-num_, den_); }

Rational::int_type Rational::to_integer() const {
  if (den_ != 1) throw Error(ErrorCode::NonIntegralDegree, str() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const { return Rational(narrow(-static_cast<i128>(num_)), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
  i128 d = static_cast<i128>(den_) * rhs.den_;
  return *this = make_reduced(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  i128 n = static_cast<i128>(num_) * rhs.num_;
  i128 d = static_cast<i128>(den_) * rhs.den_;
  return *this = make_reduced(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  i128 n = static_cast<i128>(num_) * rhs.den_;
  i128 d = static_cast<i128>(den_) * rhs.num_;
  return *this = make_reduced(n, d);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

}  // namespace orbihall
