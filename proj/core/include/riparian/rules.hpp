#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riparian/error.hpp"
#include "riparian/numeric.hpp"
#include "riparian/problem.hpp"

namespace riparian {

/// A parameter constrained to [0, 1]. The tag keeps γ and λ from being
/// passed in each other's place.
template <Quantity T, class Tag>
class UnitParameter {
 public:
  explicit UnitParameter(T value) : value_(std::move(value)) {
    if (value_ < T{0} || T{1} < value_) {
      throw ValidationError(ErrorCode::ParameterOutOfRange,
                            std::string(Tag::name) + " = " + NumericTraits<T>::to_string(value_) + " is outside [0, 1]");
    }
  }
  const T& value() const noexcept { return value_; }
  friend bool operator==(const UnitParameter&, const UnitParameter&) = default;

 private:
  T value_;
};

struct GammaTag {
  static constexpr const char* name = "gamma";
};
struct LambdaTag {
  static constexpr const char* name = "lambda";
};

/// Retention share of the geometric rules.
template <Quantity T>
using GammaParam = UnitParameter<T, GammaTag>;
/// Weight on the proportional rule in the averaging family.
template <Quantity T>
using LambdaParam = UnitParameter<T, LambdaTag>;

template <Quantity T>
struct Breakpoint {
  T t;
  T y;
};

/// Retention function Γ of a generalized geometric rule, 0 ≤ Γ(t) ≤ t.
///
/// The declared families (linear, cap, piecewise linear) are checked once at
/// construction; every evaluation re-checks the bound as well, which is the
/// only check an opaque function gets.
template <Quantity T>
class GammaFunction {
 public:
  struct Linear {
    T slope;
  };
  struct Cap {
    T level;
  };
  struct PiecewiseLinear {
    /// Strictly increasing in t; an implicit (0, 0) precedes the first one.
    std::vector<Breakpoint<T>> points;
  };
  struct Opaque {
    std::function<T(const T&)> fn;
    std::string label;
  };

  static GammaFunction linear(T slope) {
    if (slope < T{0} || T{1} < slope) {
      throw ValidationError(ErrorCode::InvalidGammaFunction, "linear slope must lie in [0, 1]");
    }
    return GammaFunction(Linear{std::move(slope)});
  }

  static GammaFunction cap(T level) {
    if (level < T{0}) throw ValidationError(ErrorCode::InvalidGammaFunction, "cap level must be non-negative");
    return GammaFunction(Cap{std::move(level)});
  }

  static GammaFunction piecewise_linear(std::vector<Breakpoint<T>> points) {
    if (points.empty()) throw ValidationError(ErrorCode::InvalidGammaFunction, "at least one breakpoint required");
    T previous_t{0};
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& [t, y] = points[i];
      if (t < T{0} || (i > 0 && !(previous_t < t))) {
        throw ValidationError(ErrorCode::InvalidGammaFunction, "breakpoints must be non-negative and increasing");
      }
      if (y < T{0} || t < y) {
        throw ValidationError(ErrorCode::InvalidGammaFunction,
                              "breakpoint (" + NumericTraits<T>::to_string(t) + ", " + NumericTraits<T>::to_string(y) +
                                  ") violates 0 <= y <= t");
      }
      previous_t = t;
    }
    PiecewiseLinear pwl{std::move(points)};
    const T slope = tail_slope(pwl);
    if (slope < T{0} || T{1} < slope) {
      throw ValidationError(ErrorCode::InvalidGammaFunction, "slope beyond the last breakpoint must lie in [0, 1]");
    }
    return GammaFunction(std::move(pwl));
  }

  static GammaFunction opaque(std::function<T(const T&)> fn, std::string label) {
    return GammaFunction(Opaque{std::move(fn), std::move(label)});
  }

  /// Γ(t); throws GammaOutOfRange when the result leaves [0, t].
  T operator()(const T& t) const {
    T result = std::visit([&](const auto& f) { return evaluate(f, t); }, repr_);
    if (result < T{0} || t < result) {
      throw ValidationError(ErrorCode::GammaOutOfRange,
                            "Gamma(" + NumericTraits<T>::to_string(t) + ") = " + NumericTraits<T>::to_string(result) +
                                " is outside [0, t]");
    }
    return result;
  }

  /// Round-trips through parse_gamma_function except for opaque functions.
  std::string describe() const {
    using Traits = NumericTraits<T>;
    return std::visit(
        [](const auto& f) -> std::string {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, Linear>) {
            return "linear:" + Traits::to_string(f.slope);
          } else if constexpr (std::is_same_v<F, Cap>) {
            return "cap:" + Traits::to_string(f.level);
          } else if constexpr (std::is_same_v<F, PiecewiseLinear>) {
            std::string out = "pwl:";
            for (std::size_t i = 0; i < f.points.size(); ++i) {
              if (i > 0) out += ",";
              out += Traits::to_string(f.points[i].t) + ":" + Traits::to_string(f.points[i].y);
            }
            return out;
          } else {
            return "opaque:" + f.label;
          }
        },
        repr_);
  }

  const auto& representation() const noexcept { return repr_; }

 private:
  using Repr = std::variant<Linear, Cap, PiecewiseLinear, Opaque>;
  explicit GammaFunction(Repr repr) : repr_(std::move(repr)) {}

  static T tail_slope(const PiecewiseLinear& f) {
    const auto& pts = f.points;
    if (pts.size() == 1) {
      if (pts[0].t == T{0}) return T{0};
      return pts[0].y / pts[0].t;
    }
    const auto& a = pts[pts.size() - 2];
    const auto& b = pts.back();
    return (b.y - a.y) / (b.t - a.t);
  }

  static T evaluate(const Linear& f, const T& t) { return f.slope * t; }
  static T evaluate(const Cap& f, const T& t) { return t < f.level ? t : f.level; }
  static T evaluate(const Opaque& f, const T& t) { return f.fn(t); }
  static T evaluate(const PiecewiseLinear& f, const T& t) {
    T left_t{0};
    T left_y{0};
    for (const auto& [bt, by] : f.points) {
      if (!(bt < t)) {
        if (bt == left_t) return by;
        return left_y + (by - left_y) * (t - left_t) / (bt - left_t);
      }
      left_t = bt;
      left_y = by;
    }
    return f.points.back().y + tail_slope(f) * (t - f.points.back().t);
  }

  Repr repr_;
};

/// Parses `linear:G`, `cap:A`, or `pwl:t0:y0,t1:y1,...`.
template <Quantity T>
GammaFunction<T> parse_gamma_function(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError(ErrorCode::InvalidGammaFunction, "expected linear:G, cap:A or pwl:t:y,... got '" +
                                                               std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  try {
    if (kind == "linear") return GammaFunction<T>::linear(parse_quantity<T>(body));
    if (kind == "cap") return GammaFunction<T>::cap(parse_quantity<T>(body));
    if (kind == "pwl") {
      std::vector<Breakpoint<T>> points;
      std::size_t start = 0;
      while (start <= body.size()) {
        const auto comma = body.find(',', start);
        const std::string_view item = body.substr(start, comma == std::string_view::npos ? comma : comma - start);
        const auto sep = item.find(':');
        if (sep == std::string_view::npos) {
          throw ValidationError(ErrorCode::InvalidGammaFunction, "breakpoint '" + std::string(item) + "' is not t:y");
        }
        points.push_back({parse_quantity<T>(item.substr(0, sep)), parse_quantity<T>(item.substr(sep + 1))});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return GammaFunction<T>::piecewise_linear(std::move(points));
    }
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ValidationError*>(&e) != nullptr) throw;
    throw ValidationError(ErrorCode::InvalidGammaFunction, e.what());
  }
  throw ValidationError(ErrorCode::InvalidGammaFunction, "unknown Gamma family '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// Rules on a linear river. Index 0 is the most upstream agent; the last index
// is the mouth.

template <Quantity T>
Allocation<T> proportional(const Problem<T>& p) {
  const T ratio = p.budget() / p.aggregate();
  std::vector<T> awards;
  awards.reserve(p.size());
  for (const T& c : p.claims()) awards.push_back(ratio * c);
  return Allocation<T>::checked(p, std::move(awards));
}

template <Quantity T>
Allocation<T> full_transfer(const Problem<T>& p) {
  std::vector<T> awards(p.size(), T{0});
  awards.back() = p.budget();
  return Allocation<T>::checked(p, std::move(awards));
}

/// a_i = c_i + Σ_{k<i} (1−γ)^{i−k} c_k, with powers built by repeated
/// multiplication.
template <Quantity T>
std::vector<T> augmented_claims(std::span<const T> claims, const GammaParam<T>& gamma) {
  const T decay = T{1} - gamma.value();
  std::vector<T> augmented;
  augmented.reserve(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) {
    T sum = claims[i];
    T power{1};
    for (std::size_t k = i; k-- > 0;) {
      power = power * decay;
      sum = sum + power * claims[k];
    }
    augmented.push_back(std::move(sum));
  }
  return augmented;
}

/// Closed-form geometric rule.
template <Quantity T>
Allocation<T> geometric(const Problem<T>& p, const GammaParam<T>& gamma) {
  const std::vector<T> augmented = augmented_claims(p.claims(), gamma);
  const T ratio = p.budget() / p.aggregate();
  const std::size_t n = p.size();
  std::vector<T> awards;
  awards.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) awards.push_back(gamma.value() * augmented[i] * ratio);
  awards.push_back(augmented[n - 1] * ratio);
  return Allocation<T>::checked(p, std::move(awards));
}

template <Quantity T>
struct BubbleTrace {
  std::vector<T> augmented;
  std::vector<T> retained;
  Allocation<T> allocation;
};

/// The bubbling-down process run step by step: each agent keeps γ of what it
/// holds and passes the rest to its successor; the mouth keeps everything.
/// Shares no code with geometric() so the two can check each other.
template <Quantity T>
BubbleTrace<T> geometric_bubble_trace(const Problem<T>& p, const GammaParam<T>& gamma) {
  const std::size_t n = p.size();
  std::vector<T> augmented(n);
  std::vector<T> retained(n);
  T carried{0};
  for (std::size_t i = 0; i < n; ++i) {
    augmented[i] = p.claim(i) + carried;
    retained[i] = (i + 1 == n) ? augmented[i] : gamma.value() * augmented[i];
    carried = augmented[i] - retained[i];
  }
  std::vector<T> awards(n);
  for (std::size_t i = 0; i < n; ++i) awards[i] = retained[i] * p.budget() / p.aggregate();
  return {std::move(augmented), std::move(retained), Allocation<T>::checked(p, std::move(awards))};
}

template <Quantity T>
Allocation<T> geometric_bubble_oracle(const Problem<T>& p, const GammaParam<T>& gamma) {
  return geometric_bubble_trace(p, gamma).allocation;
}

template <Quantity T>
Allocation<T> averaging(const Problem<T>& p, const LambdaParam<T>& lambda) {
  const Allocation<T> prop = proportional(p);
  const Allocation<T> ft = full_transfer(p);
  const T& w = lambda.value();
  std::vector<T> awards;
  awards.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) awards.push_back(w * prop[i] + (T{1} - w) * ft[i]);
  return Allocation<T>::checked(p, std::move(awards));
}

/// Retained shares r^Γ(c). They depend on the claims only; the budget enters
/// through the final E/C scaling.
template <Quantity T>
std::vector<T> generalized_geometric_shares(std::span<const T> claims, const GammaFunction<T>& gamma_fn) {
  const std::size_t n = claims.size();
  std::vector<T> shares;
  shares.reserve(n);
  T residual{0};  // Σ_{k<i} (c_k − r_k)
  for (std::size_t i = 0; i < n; ++i) {
    const T mass = claims[i] + residual;
    T share = (i + 1 == n) ? mass : gamma_fn(mass);
    residual = residual + claims[i] - share;
    shares.push_back(std::move(share));
  }
  return shares;
}

template <Quantity T>
Allocation<T> generalized_geometric(const Problem<T>& p, const GammaFunction<T>& gamma_fn) {
  std::vector<T> awards = generalized_geometric_shares(p.claims(), gamma_fn);
  const T ratio = p.budget() / p.aggregate();
  for (T& a : awards) a = a * ratio;
  return Allocation<T>::checked(p, std::move(awards));
}

}  // namespace riparian
