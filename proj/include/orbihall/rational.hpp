#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over 64-bit integers.
 *
 * Values are always reduced with a positive denominator, so structural
 * equality is numeric equality. Intermediate products are formed in 128 bits
 * and any result that does not fit back into 64 bits raises
 * ErrorCode::Overflow instead of wrapping.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace orbihall {

class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(int_type n) : num_(n), den_(1) {}  // NOLINT: implicit from integers
  Rational(int_type n, int_type d);

  int_type num() const noexcept { return num_; }
  int_type den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Largest integer <= value.
  int_type floor() const noexcept;
  int_type ceil() const noexcept;
  /// Returns the integer value; throws NonIntegralDegree if not an integer.
  int_type to_integer() const;

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  int_type num_ = 0;
  int_type den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Checked integer helpers used by the formula engine.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace orbihall
