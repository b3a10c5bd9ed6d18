#include "riparian/numeric.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace riparian {

double NumericTraits<double>::parse(std::string_view text) {
  // The exact parser validates the syntax and handles "a/b"; plain decimals
  // are then read with from_chars, which rounds correctly (GMP's mpq -> double
  // conversion truncates).
  const Rational exact = Rational::parse(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.find('/') != std::string_view::npos) return exact.to_double();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) return exact.to_double();
  return value;
}

std::string NumericTraits<double>::to_string(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf.data(), end);
}

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // The 1e-9 nudge keeps binary representation error (2.675 stored as
  // 2.67499...) from flipping a printed half-way case downwards.
  const double scaled = value * scale;
  const double rounded = scaled >= 0 ? std::floor(scaled + 0.5 + 1e-9) : -std::floor(-scaled + 0.5 + 1e-9);
  return rounded / scale;
}

std::string format_fixed(double value, int decimals) {
  const double rounded = round_half_up(value, decimals);
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", decimals, rounded == 0.0 ? 0.0 : rounded);
  return std::string(buf.data());
}

}  // namespace riparian
