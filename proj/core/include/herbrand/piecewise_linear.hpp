#pragma once

#include <span>
#include <string>
#include <vector>

#include "herbrand/rational.hpp"

namespace herbrand {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous, strictly increasing, piecewise-linear bijection of [0, inf)
/// with f(0) = 0.
///
/// Stored canonically: breakpoints start at (0, 0) with strictly increasing
/// x, slopes()[i] is the slope on [x_i, x_{i+1}) and the last slope extends
/// to infinity. Adjacent slopes always differ, so two functions are equal
/// pointwise iff they are equal as values.
class PiecewiseLinearFn {
 public:
  /// The identity x -> x.
  PiecewiseLinearFn();

  static PiecewiseLinearFn identity() { return {}; }
  static PiecewiseLinearFn linear(const Rational& slope);

  /// Builds f from segment start abscissae (first must be 0, strictly
  /// increasing) and one positive slope per segment. Collinear neighbours
  /// are merged.
  static PiecewiseLinearFn from_segments(std::span<const Rational> starts,
                                         std::span<const Rational> slopes);

  const std::vector<Breakpoint>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& slopes() const { return slopes_; }
  std::size_t segment_count() const { return slopes_.size(); }
  const Rational& final_slope() const { return slopes_.back(); }

  /// Exact value f(x); throws ErrorCode::domain for x < 0.
  Rational operator()(const Rational& x) const;

  /// Slope of the segment containing [x, x + eps).
  const Rational& right_slope(const Rational& x) const;

  bool is_convex() const;   // slopes non-decreasing
  bool is_concave() const;  // slopes non-increasing

  friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;

  std::string to_string() const;

 private:
  PiecewiseLinearFn(std::vector<Breakpoint> breaks, std::vector<Rational> slopes);
  std::size_t segment_index(const Rational& x) const;

  std::vector<Breakpoint> breaks_;
  std::vector<Rational> slopes_;
};

/// The inverse function g with g(f(x)) = x.
PiecewiseLinearFn invert(const PiecewiseLinearFn& f);

/// outer o inner, in canonical form.
PiecewiseLinearFn compose(const PiecewiseLinearFn& outer, const PiecewiseLinearFn& inner);

}  // namespace herbrand
