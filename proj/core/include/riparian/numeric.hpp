#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "riparian/rational.hpp"

namespace riparian {

/// Backend contract for quantities. Two backends exist: Rational (exact) and
/// double (fast). Every algorithm in the library is written once against this
/// trait and instantiated for both.
template <class T>
struct NumericTraits;

template <>
struct NumericTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view backend_name = "exact";

  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static Rational ratio(long numerator, long denominator) { return {numerator, denominator}; }
  static std::string to_string(const Rational& v) { return v.to_string(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational abs(const Rational& v) { return riparian::abs(v); }

  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool less_or_equal(const Rational& a, const Rational& b) { return a <= b; }
  /// Differences above this are reported as axiom violations.
  static Rational violation_tolerance() { return Rational(0); }
};

template <>
struct NumericTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view backend_name = "float";
  static constexpr double equality_tolerance = 1e-9;

  /// Accepts the same syntax as Rational::parse, including "a/b".
  static double parse(std::string_view text);
  static double ratio(long numerator, long denominator) {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  /// Shortest representation that parses back to the same double.
  static std::string to_string(double v);
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }

  static bool equal(double a, double b) { return std::fabs(a - b) <= equality_tolerance; }
  static bool less_or_equal(double a, double b) { return a <= b + equality_tolerance; }
  static double violation_tolerance() { return 1e-6; }
};

template <class T>
concept Quantity = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
  { NumericTraits<T>::parse(std::string_view{}) } -> std::same_as<T>;
  { NumericTraits<T>::to_string(a) } -> std::same_as<std::string>;
  { NumericTraits<T>::equal(a, b) } -> std::same_as<bool>;
};

template <Quantity T>
T parse_quantity(std::string_view text) {
  return NumericTraits<T>::parse(text);
}

template <Quantity T>
std::string format_quantity(const T& v) {
  return NumericTraits<T>::to_string(v);
}

template <Quantity T>
double to_double(const T& v) {
  return NumericTraits<T>::to_double(v);
}

/// Half-up rounding to a fixed number of decimals, as used for printed tables.
double round_half_up(double value, int decimals);
std::string format_fixed(double value, int decimals);

}  // namespace riparian
