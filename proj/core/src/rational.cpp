#include "riparian/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace riparian {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// Decimal literal with optional sign, fraction and exponent.
mpq_class parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if (!whole.empty() && !all_digits(whole)) bad_number(text);
    if (!frac.empty() && !all_digits(frac)) bad_number(text);
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  mpq_class result{mpz_class(digits, 10)};
  const long scale = exponent - fraction_digits;
  if (scale > 0) {
    result *= mpq_class(pow10(static_cast<unsigned long>(scale)));
  } else if (scale < 0) {
    result /= mpq_class(pow10(static_cast<unsigned long>(-scale)));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpq_class num = parse_decimal(text.substr(0, slash));
    const mpq_class den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator: " + std::string(text));
    return Rational(mpq_class(num / den));
  }
  return Rational(parse_decimal(text));
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }
bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

}  // namespace riparian
