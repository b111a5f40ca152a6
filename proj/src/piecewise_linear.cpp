#include "uryson/piecewise_linear.hpp"

#include <algorithm>
#include <sstream>

namespace uryson {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Breakpoint> breakpoints, Rational left_slope,
                                     Rational right_slope)
    : breakpoints_(std::move(breakpoints)), left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)) {
    if (breakpoints_.empty()) throw std::invalid_argument("PiecewiseLinearFn: no breakpoints");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1].first < breakpoints_[i].first))
            throw std::invalid_argument("PiecewiseLinearFn: breakpoints not strictly increasing");
    canonicalize();
}

PiecewiseLinearFn PiecewiseLinearFn::constant(const Rational& c) {
    return PiecewiseLinearFn({{Rational(0), c}}, Rational(0), Rational(0));
}

PiecewiseLinearFn PiecewiseLinearFn::linear(const Rational& c) {
    return PiecewiseLinearFn({{Rational(0), Rational(0)}}, c, c);
}

PiecewiseLinearFn PiecewiseLinearFn::absolute() {
    return PiecewiseLinearFn({{Rational(0), Rational(0)}}, Rational(-1), Rational(1));
}

void PiecewiseLinearFn::canonicalize() {
    // A breakpoint is essential iff the slope changes there.
    const std::size_t k = breakpoints_.size();
    auto segment_slope = [&](std::size_t i) {  // slope on [bp_i, bp_{i+1}]
        return (breakpoints_[i + 1].second - breakpoints_[i].second) /
               (breakpoints_[i + 1].first - breakpoints_[i].first);
    };
    std::vector<Breakpoint> kept;
    for (std::size_t i = 0; i < k; ++i) {
        Rational before = i == 0 ? left_slope_ : segment_slope(i - 1);
        Rational after = i + 1 == k ? right_slope_ : segment_slope(i);
        if (before != after) kept.push_back(breakpoints_[i]);
    }
    if (kept.empty()) {
        // Affine everywhere: represent by the value at t = 0.
        const Breakpoint& b = breakpoints_.front();
        kept.push_back({Rational(0), b.second - left_slope_ * b.first});
    }
    breakpoints_ = std::move(kept);
}

Rational PiecewiseLinearFn::operator()(const Rational& t) const {
    const auto& bps = breakpoints_;
    if (t <= bps.front().first) return bps.front().second + left_slope_ * (t - bps.front().first);
    if (t >= bps.back().first) return bps.back().second + right_slope_ * (t - bps.back().first);
    auto it = std::upper_bound(bps.begin(), bps.end(), t,
                               [](const Rational& v, const Breakpoint& b) { return v < b.first; });
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    Rational slope = (hi.second - lo.second) / (hi.first - lo.first);
    return lo.second + slope * (t - lo.first);
}

bool PiecewiseLinearFn::is_zero() const {
    return breakpoints_.size() == 1 && breakpoints_.front().second.is_zero() && left_slope_.is_zero() &&
           right_slope_.is_zero();
}

bool PiecewiseLinearFn::is_nonnegative() const {
    if (left_slope_ > Rational(0) || right_slope_ < Rational(0)) return false;
    for (const auto& b : breakpoints_)
        if (b.second < Rational(0)) return false;
    return true;
}

std::optional<Rational> PiecewiseLinearFn::negative_point() const {
    for (const auto& b : breakpoints_)
        if (b.second < Rational(0)) return b.first;
    if (left_slope_ > Rational(0)) {
        const auto& b = breakpoints_.front();
        return b.first - b.second / left_slope_ - Rational(1);
    }
    if (right_slope_ < Rational(0)) {
        const auto& b = breakpoints_.back();
        return b.first - b.second / right_slope_ + Rational(1);
    }
    return std::nullopt;
}

PiecewiseLinearFn PiecewiseLinearFn::operator+(const PiecewiseLinearFn& o) const {
    std::vector<Rational> ts;
    for (const auto& b : breakpoints_) ts.push_back(b.first);
    for (const auto& b : o.breakpoints_) ts.push_back(b.first);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Breakpoint> bps;
    bps.reserve(ts.size());
    for (const auto& t : ts) bps.push_back({t, (*this)(t) + o(t)});
    return PiecewiseLinearFn(std::move(bps), left_slope_ + o.left_slope_, right_slope_ + o.right_slope_);
}

PiecewiseLinearFn PiecewiseLinearFn::operator-(const PiecewiseLinearFn& o) const {
    return *this + o.scaled(Rational(-1));
}

PiecewiseLinearFn PiecewiseLinearFn::scaled(const Rational& c) const {
    std::vector<Breakpoint> bps;
    bps.reserve(breakpoints_.size());
    for (const auto& b : breakpoints_) bps.push_back({b.first, b.second * c});
    return PiecewiseLinearFn(std::move(bps), left_slope_ * c, right_slope_ * c);
}

PiecewiseLinearFn PiecewiseLinearFn::max_with(const PiecewiseLinearFn& o) const {
    const PiecewiseLinearFn& f = *this;
    const PiecewiseLinearFn& g = o;
    std::vector<Rational> ts;
    for (const auto& b : f.breakpoints_) ts.push_back(b.first);
    for (const auto& b : g.breakpoints_) ts.push_back(b.first);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    // Crossings of f - g inside segments and on the two rays.
    std::vector<Rational> crossings;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Rational da = f(ts[i]) - g(ts[i]);
        Rational db = f(ts[i + 1]) - g(ts[i + 1]);
        if (da.sign() * db.sign() < 0) {
            // da + (db - da) * s = 0 at s = da / (da - db), strictly inside.
            Rational s = da / (da - db);
            crossings.push_back(ts[i] + s * (ts[i + 1] - ts[i]));
        }
    }
    {
        Rational d0 = f(ts.front()) - g(ts.front());
        Rational dslope = f.left_slope_ - g.left_slope_;
        if (!d0.is_zero() && !dslope.is_zero()) {
            Rational t = ts.front() - d0 / dslope;
            if (t < ts.front()) crossings.push_back(t);
        }
        Rational d1 = f(ts.back()) - g(ts.back());
        Rational rslope = f.right_slope_ - g.right_slope_;
        if (!d1.is_zero() && !rslope.is_zero()) {
            Rational t = ts.back() - d1 / rslope;
            if (t > ts.back()) crossings.push_back(t);
        }
    }
    ts.insert(ts.end(), crossings.begin(), crossings.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<Breakpoint> bps;
    bps.reserve(ts.size());
    for (const auto& t : ts) bps.push_back({t, max(f(t), g(t))});
    // Beyond the outermost candidate points one input dominates, so the ray
    // slopes can be read off one unit further out.
    Rational left0 = max(f(ts.front() - Rational(1)), g(ts.front() - Rational(1)));
    Rational right0 = max(f(ts.back() + Rational(1)), g(ts.back() + Rational(1)));
    Rational lslope = bps.front().second - left0;
    Rational rslope = right0 - bps.back().second;
    return PiecewiseLinearFn(std::move(bps), std::move(lslope), std::move(rslope));
}

PiecewiseLinearFn PiecewiseLinearFn::min_with(const PiecewiseLinearFn& o) const {
    return scaled(Rational(-1)).max_with(o.scaled(Rational(-1))).scaled(Rational(-1));
}

bool PiecewiseLinearFn::operator==(const PiecewiseLinearFn& o) const {
    return breakpoints_ == o.breakpoints_ && left_slope_ == o.left_slope_ && right_slope_ == o.right_slope_;
}

std::pair<Rational, Rational> PiecewiseLinearFn::range_on(const Rational& lo, const Rational& hi) const {
    if (hi < lo) throw std::invalid_argument("range_on: empty interval");
    Rational mn = (*this)(lo), mx = mn;
    auto consider = [&](const Rational& v) {
        mn = min(mn, v);
        mx = max(mx, v);
    };
    consider((*this)(hi));
    for (const auto& b : breakpoints_)
        if (lo < b.first && b.first < hi) consider(b.second);
    return {mn, mx};
}

std::vector<PiecewiseLinearFn::ZeroInterval> PiecewiseLinearFn::zero_intervals() const {
    if (!is_nonnegative())
        throw std::invalid_argument("zero_intervals: function must be nonnegative");
    std::vector<ZeroInterval> raw;
    const auto& bps = breakpoints_;
    if (bps.front().second.is_zero() && left_slope_.is_zero())
        raw.push_back({std::nullopt, bps.front().first});
    for (std::size_t i = 0; i < bps.size(); ++i) {
        if (!bps[i].second.is_zero()) continue;
        if (i + 1 < bps.size() && bps[i + 1].second.is_zero())
            raw.push_back({bps[i].first, bps[i + 1].first});
        else
            raw.push_back({bps[i].first, bps[i].first});
    }
    if (bps.back().second.is_zero() && right_slope_.is_zero())
        raw.push_back({bps.back().first, std::nullopt});
    // Merge touching or overlapping intervals.
    std::vector<ZeroInterval> merged;
    for (auto& z : raw) {
        if (!merged.empty()) {
            ZeroInterval& last = merged.back();
            bool touches = !last.hi.has_value() || (z.lo.has_value() && *z.lo <= *last.hi);
            if (touches) {
                if (last.hi.has_value() && (!z.hi.has_value() || *last.hi < *z.hi)) last.hi = z.hi;
                continue;
            }
        }
        merged.push_back(z);
    }
    return merged;
}

std::string PiecewiseLinearFn::str() const {
    std::ostringstream os;
    os << "pwl[" << left_slope_ << " <-";
    for (const auto& b : breakpoints_) os << " (" << b.first << "," << b.second << ")";
    os << " -> " << right_slope_ << "]";
    return os.str();
}

}  // namespace uryson
