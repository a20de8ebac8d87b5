#ifndef CODEDSHIFT_INTERVAL_HPP
#define CODEDSHIFT_INTERVAL_HPP

#include <cmath>
#include <limits>

namespace codedshift {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Closed enclosure [lower, upper]. upper == +inf encodes
// divergent-or-unbounded; lower == upper == -inf is the empty-series
// convention used for h(L) of finite code sets.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }
    double mid() const { return lower + (upper - lower) / 2; }
    bool contains(double x) const { return lower <= x && x <= upper; }
    bool is_finite() const { return std::isfinite(lower) && std::isfinite(upper); }

    static Interval point(double x) { return {x, x}; }
    static Interval unbounded_above(double lo) { return {lo, kInf}; }
};

} // namespace codedshift

#endif
