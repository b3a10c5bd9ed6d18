#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riparian {

/// Exact arbitrary-precision rational number, always kept in lowest terms.
///
/// A thin value type over GMP's mpq_class so that generic code can treat it
/// like any other arithmetic scalar (every operator returns a Rational, not
/// an expression template).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "7", "-3/4", "4.17", "1.5e-3" exactly. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string numerator_string() const;
  std::string denominator_string() const;
  bool is_integer() const;

  /// Lowest-terms fraction, e.g. "7/3" or "-2".
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
Rational floor(const Rational& r);

}  // namespace riparian
