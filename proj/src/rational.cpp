#include "borda/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace borda {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                "' (expected \"p/q\" or an integer)");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator) : num_(numerator), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const __int128 g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits64(numerator) || !fits64(denominator)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(static_cast<__int128>(num_) + rhs.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                      static_cast<__int128>(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const __int128 a = static_cast<__int128>(lhs.num_) * rhs.den_;
  const __int128 b = static_cast<__int128>(rhs.num_) * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace borda
