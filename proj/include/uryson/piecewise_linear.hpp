#ifndef URYSON_PIECEWISE_LINEAR_HPP
#define URYSON_PIECEWISE_LINEAR_HPP

#include "uryson/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uryson {

/// Continuous piecewise-linear function R -> R with exact rational data:
/// breakpoints (t, value) strictly increasing in t, plus the slopes of the
/// two unbounded rays. Instances are kept canonical (no collinear
/// breakpoints; a affine function is a single breakpoint at t = 0), so
/// structural equality coincides with pointwise equality.
class PiecewiseLinearFn {
public:
    using Breakpoint = std::pair<Rational, Rational>;

    PiecewiseLinearFn(std::vector<Breakpoint> breakpoints, Rational left_slope, Rational right_slope);

    static PiecewiseLinearFn zero() { return constant(Rational(0)); }
    static PiecewiseLinearFn constant(const Rational& c);
    /// c * t
    static PiecewiseLinearFn linear(const Rational& c);
    /// |t|
    static PiecewiseLinearFn absolute();

    const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
    const Rational& left_slope() const { return left_slope_; }
    const Rational& right_slope() const { return right_slope_; }

    Rational operator()(const Rational& t) const;

    bool is_zero() const;
    /// f(t) >= 0 for all t; exact criterion: all breakpoint values >= 0,
    /// left slope <= 0, right slope >= 0.
    bool is_nonnegative() const;
    /// Some t with f(t) < 0, when one exists.
    std::optional<Rational> negative_point() const;

    PiecewiseLinearFn operator+(const PiecewiseLinearFn& o) const;
    PiecewiseLinearFn operator-(const PiecewiseLinearFn& o) const;
    PiecewiseLinearFn scaled(const Rational& c) const;
    PiecewiseLinearFn max_with(const PiecewiseLinearFn& o) const;
    PiecewiseLinearFn min_with(const PiecewiseLinearFn& o) const;
    PiecewiseLinearFn positive_part() const { return max_with(zero()); }
    PiecewiseLinearFn negative_part() const { return scaled(Rational(-1)).max_with(zero()); }
    PiecewiseLinearFn absolute_value() const { return max_with(scaled(Rational(-1))); }

    bool operator==(const PiecewiseLinearFn& o) const;
    bool operator!=(const PiecewiseLinearFn& o) const { return !(*this == o); }

    /// Exact min and max of f over the closed interval [lo, hi].
    std::pair<Rational, Rational> range_on(const Rational& lo, const Rational& hi) const;

    /// Zero set of a nonnegative function, as maximal closed intervals.
    /// Unbounded endpoints are absent optionals.
    struct ZeroInterval {
        std::optional<Rational> lo, hi;
    };
    std::vector<ZeroInterval> zero_intervals() const;

    std::string str() const;

private:
    std::vector<Breakpoint> breakpoints_;
    Rational left_slope_;
    Rational right_slope_;

    void canonicalize();
};

}  // namespace uryson

#endif
