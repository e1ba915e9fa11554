#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace masip {

/// Exact fraction with a positive denominator, always stored reduced.
///
/// Factors are kept exact so identities such as
/// reusability + extra_cost(m) == 100 * |m| / |union| can be checked with
/// zero tolerance. Rendering rounds half away from zero.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const noexcept = default;
  std::strong_ordering operator<=>(const Rational& o) const noexcept;

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Nearest integer, ties away from zero.
  std::int64_t round_int() const noexcept;
  // Value scaled by 10^digits, rounded half away from zero.
  std::int64_t round_scaled(int digits) const noexcept;
  // Decimal rendering with a fixed number of fractional digits, e.g. "46.9".
  std::string to_fixed(int digits = 1) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Renders a value already scaled by 10^digits ("469", 1 -> "46.9").
std::string format_scaled(std::int64_t scaled, int digits);

}  // namespace masip
