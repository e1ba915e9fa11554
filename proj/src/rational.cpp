#include "masip/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace masip {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  return {(num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1)};
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const noexcept {
  // Both denominators are positive.
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  return lhs <=> rhs;
}

std::int64_t Rational::round_scaled(int digits) const noexcept {
  __int128 scaled = num_;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  const __int128 mag = scaled < 0 ? -scaled : scaled;
  const __int128 q = (2 * mag + den_) / (2 * static_cast<__int128>(den_));
  return static_cast<std::int64_t>(scaled < 0 ? -q : q);
}

std::int64_t Rational::round_int() const noexcept { return round_scaled(0); }

std::string Rational::to_fixed(int digits) const { return format_scaled(round_scaled(digits), digits); }

std::string format_scaled(std::int64_t scaled, int digits) {
  const bool negative = scaled < 0;
  std::string s = std::to_string(negative ? -scaled : scaled);
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, 1, '.');
  }
  return negative ? "-" + s : s;
}

}  // namespace masip
