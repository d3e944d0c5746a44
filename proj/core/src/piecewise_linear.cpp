#include "herbrand/piecewise_linear.hpp"

#include <algorithm>
#include <sstream>

#include "herbrand/error.hpp"

namespace herbrand {

PiecewiseLinearFn::PiecewiseLinearFn() : breaks_{{0, 0}}, slopes_{1} {}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Breakpoint> breaks, std::vector<Rational> slopes)
    : breaks_(std::move(breaks)), slopes_(std::move(slopes)) {}

PiecewiseLinearFn PiecewiseLinearFn::linear(const Rational& slope) {
  Rational starts[] = {0};
  Rational slopes[] = {slope};
  return from_segments(starts, slopes);
}

PiecewiseLinearFn PiecewiseLinearFn::from_segments(std::span<const Rational> starts,
                                                   std::span<const Rational> slopes) {
  if (starts.empty() || starts.size() != slopes.size()) {
    throw Error(ErrorCode::invalid_parameter, "need one slope per segment and at least one segment");
  }
  if (starts.front() != 0) {
    throw Error(ErrorCode::invalid_parameter, "first segment must start at x = 0");
  }
  std::vector<Breakpoint> breaks;
  std::vector<Rational> out_slopes;
  Rational y = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (slopes[i].sign() <= 0) {
      throw Error(ErrorCode::invalid_parameter, "slopes must be positive, got " + slopes[i].to_string());
    }
    if (i > 0) {
      if (starts[i] <= starts[i - 1]) {
        throw Error(ErrorCode::invalid_parameter, "segment starts must be strictly increasing");
      }
      y += slopes[i - 1] * (starts[i] - starts[i - 1]);
    }
    if (!out_slopes.empty() && out_slopes.back() == slopes[i]) continue;  // collinear
    breaks.push_back({starts[i], y});
    out_slopes.push_back(slopes[i]);
  }
  return PiecewiseLinearFn(std::move(breaks), std::move(out_slopes));
}

std::size_t PiecewiseLinearFn::segment_index(const Rational& x) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x,
                             [](const Rational& v, const Breakpoint& b) { return v < b.x; });
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Rational PiecewiseLinearFn::operator()(const Rational& x) const {
  if (x.sign() < 0) {
    throw Error(ErrorCode::domain, "piecewise-linear functions live on [0, inf); got x = " + x.to_string());
  }
  const auto i = segment_index(x);
  return breaks_[i].y + slopes_[i] * (x - breaks_[i].x);
}

const Rational& PiecewiseLinearFn::right_slope(const Rational& x) const {
  if (x.sign() < 0) throw Error(ErrorCode::domain, "x < 0");
  return slopes_[segment_index(x)];
}

bool PiecewiseLinearFn::is_convex() const {
  return std::is_sorted(slopes_.begin(), slopes_.end());
}

bool PiecewiseLinearFn::is_concave() const {
  return std::is_sorted(slopes_.rbegin(), slopes_.rend());
}

std::string PiecewiseLinearFn::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    const auto& b = breaks_[i];
    os << "[" << b.x << ", ";
    if (i + 1 < slopes_.size()) os << breaks_[i + 1].x; else os << "inf";
    os << "): " << b.y << " + " << slopes_[i] << "*(x - " << b.x << ")";
    if (i + 1 < slopes_.size()) os << "\n";
  }
  return os.str();
}

PiecewiseLinearFn invert(const PiecewiseLinearFn& f) {
  std::vector<Rational> starts, slopes;
  for (std::size_t i = 0; i < f.segment_count(); ++i) {
    starts.push_back(f.breakpoints()[i].y);
    slopes.push_back(Rational(1) / f.slopes()[i]);
  }
  return PiecewiseLinearFn::from_segments(starts, slopes);
}

PiecewiseLinearFn compose(const PiecewiseLinearFn& outer, const PiecewiseLinearFn& inner) {
  const auto inner_inverse = invert(inner);
  std::vector<Rational> starts;
  for (const auto& b : inner.breakpoints()) starts.push_back(b.x);
  for (const auto& b : outer.breakpoints()) starts.push_back(inner_inverse(b.x));
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<Rational> slopes;
  slopes.reserve(starts.size());
  for (const auto& x : starts) slopes.push_back(outer.right_slope(inner(x)) * inner.right_slope(x));
  return PiecewiseLinearFn::from_segments(starts, slopes);
}

}  // namespace herbrand
