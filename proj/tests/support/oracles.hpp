#pragma once

// Reference computations typed in directly from the closed-form expressions.
// They deliberately share no code with the library so that agreement means
// something.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "riparian/rational.hpp"

namespace oracle {

using riparian::Rational;

inline Rational power(const Rational& base, std::size_t exponent) {
  Rational out(1);
  for (std::size_t k = 0; k < exponent; ++k) out = out * base;
  return out;
}

inline Rational sum(const std::vector<Rational>& values) {
  Rational total(0);
  for (const auto& v : values) total = total + v;
  return total;
}

/// r_i = γ [c_i + Σ_{k<i} (1−γ)^{i−k} c_k] for i < n, without the γ factor
/// at the mouth; x = r E / C.
inline std::vector<Rational> geometric_awards(const std::vector<Rational>& c, const Rational& E, const Rational& gamma) {
  const std::size_t n = c.size();
  const Rational one_minus = Rational(1) - gamma;
  std::vector<Rational> x(n);
  const Rational C = sum(c);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(0);
    for (std::size_t k = 0; k <= i; ++k) r = r + power(one_minus, i - k) * c[k];
    if (i + 1 < n) r = gamma * r;
    x[i] = r * E / C;
  }
  return x;
}

inline std::vector<Rational> proportional_awards(const std::vector<Rational>& c, const Rational& E) {
  std::vector<Rational> x;
  const Rational C = sum(c);
  for (const auto& ci : c) x.push_back(ci * E / C);
  return x;
}

inline std::vector<Rational> full_transfer_awards(std::size_t n, const Rational& E) {
  std::vector<Rational> x(n, Rational(0));
  x.back() = E;
  return x;
}

inline std::vector<Rational> averaging_awards(const std::vector<Rational>& c, const Rational& E, const Rational& lambda) {
  std::vector<Rational> x = proportional_awards(c, E);
  for (auto& v : x) v = lambda * v;
  x.back() = x.back() + (Rational(1) - lambda) * E;
  return x;
}

/// Retained shares of the six-node hierarchy 1→{2,3}, 3→{4,5}, 5→6, typed in
/// from the explicit expressions.
inline std::vector<Rational> hierarchy_shares(const std::vector<Rational>& c, const Rational& g) {
  const Rational h(1, 2);
  const Rational u = Rational(1) - g;
  const Rational inner = c[4] + h * u * c[2] + Rational(1, 4) * u * u * c[0];
  return {
      g * c[0],
      c[1] + h * u * c[0],
      g * (c[2] + h * u * c[0]),
      c[3] + h * u * c[2] + Rational(1, 4) * u * u * c[0],
      g * inner,
      c[5] + u * inner,
  };
}

/// Retained shares of the five-node boundary river 1→{2,3}, {2,3}→4, 4→5.
inline std::vector<Rational> boundary_shares(const std::vector<Rational>& c, const Rational& g) {
  const Rational h(1, 2);
  const Rational u = Rational(1) - g;
  const Rational inner = c[3] + u * c[1] + u * c[2] + u * u * c[0];
  return {
      g * c[0],
      g * (c[1] + h * u * c[0]),
      g * (c[2] + h * u * c[0]),
      g * inner,
      c[4] + u * inner,
  };
}

/// Smallest γ with claims-bounded geometric awards on ((2,2,2), 4): the
/// mouth constraint 2(1 + u + u²)·4/6 ≤ 2 with u = 1 − γ, i.e. 2u² + 2u − 1 = 0.
inline double min_gamma_two_two_two() { return (3.0 - std::sqrt(3.0)) / 2.0; }

/// Geometric awards in doubles from the same closed form.
inline std::vector<double> geometric_awards(const std::vector<double>& c, double E, double gamma) {
  const std::size_t n = c.size();
  double C = 0;
  for (double v : c) C += v;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0;
    for (std::size_t k = 0; k <= i; ++k) r += std::pow(1.0 - gamma, static_cast<double>(i - k)) * c[k];
    if (i + 1 < n) r *= gamma;
    x[i] = r * E / C;
  }
  return x;
}

inline bool claims_bounded(const std::vector<double>& c, const std::vector<double>& x, double slack = 1e-12) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (x[i] > c[i] + slack) return false;
  }
  return true;
}

/// Lowest γ on a uniform grid of `steps` intervals for which the geometric
/// awards are claims-bounded, refined by plain bisection to `tol`.
inline double min_gamma_by_dense_scan(const std::vector<double>& c, double E, std::size_t steps = 100000,
                                      double tol = 1e-10) {
  auto ok = [&](double g) { return claims_bounded(c, geometric_awards(c, E, g)); };
  std::size_t k = 0;
  while (k < steps && !ok(static_cast<double>(k) / static_cast<double>(steps))) ++k;
  if (k == 0) return 0;
  double lo = static_cast<double>(k - 1) / static_cast<double>(steps);
  double hi = static_cast<double>(k) / static_cast<double>(steps);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// γ maximising agent i's award on a uniform grid of step 1e-4 (first
/// maximiser wins ties).
inline double dense_argmax(const std::vector<double>& c, double E, std::size_t agent, std::size_t steps = 10000) {
  double best_at = 0;
  double best = -1;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double g = static_cast<double>(k) / static_cast<double>(steps);
    const double v = geometric_awards(c, E, g)[agent];
    if (v > best) {
      best = v;
      best_at = g;
    }
  }
  return best_at;
}

}  // namespace oracle
