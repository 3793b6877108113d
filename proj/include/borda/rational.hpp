#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace borda {

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Arithmetic is carried out in 128-bit intermediates and throws
/// std::overflow_error when a reduced result no longer fits in 64 bits.
/// Scores and weights in this library have small denominators, so overflow
/// signals a malformed input rather than a limitation in practice.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Parses "p/q" or "p" (optional leading '-'). Decimal points are rejected.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace borda
