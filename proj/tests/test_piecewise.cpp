#include "uryson/piecewise_linear.hpp"

#include "uryson/sampling.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace uryson;
using testutil::R;

namespace {

PiecewiseLinearFn hat() {
    // 0 at -1, 2 at 0, 0 at 2, slopes 1 and -1 beyond.
    return PiecewiseLinearFn({{R(-1), R(0)}, {R(0), R(2)}, {R(2), R(0)}}, R(1), R(-1));
}

std::vector<Rational> probe_points(Rng& rng, const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
    std::vector<Rational> pts;
    for (const auto& b : f.breakpoints()) pts.push_back(b.first);
    for (const auto& b : g.breakpoints()) pts.push_back(b.first);
    std::size_t fixed = pts.size();
    for (std::size_t i = 0; i < fixed; ++i) {
        pts.push_back(pts[i] + R(1, 3));
        pts.push_back(pts[i] - R(1, 3));
    }
    pts.push_back(R(-100));
    pts.push_back(R(100));
    for (int i = 0; i < 10; ++i) pts.push_back(rng.rational(20, 3));
    return pts;
}

}  // namespace

TEST_CASE("construction and evaluation") {
    CHECK_THROWS_AS(PiecewiseLinearFn({}, R(0), R(0)), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearFn({{R(1), R(0)}, {R(1), R(2)}}, R(0), R(0)), std::invalid_argument);

    PiecewiseLinearFn f({{R(-1), R(1)}, {R(0), R(0)}, {R(2), R(4)}}, R(-2), R(1));
    CHECK(f(R(-3)) == R(5));       // left ray
    CHECK(f(R(-1)) == R(1));
    CHECK(f(R(-1, 2)) == R(1, 2)); // interpolation
    CHECK(f(R(1)) == R(2));
    CHECK(f(R(3)) == R(5));        // right ray
    CHECK(f(R(1, 3)) == R(2, 3));

    CHECK(PiecewiseLinearFn::absolute()(R(-7, 2)) == R(7, 2));
    CHECK(PiecewiseLinearFn::linear(R(3))(R(-1, 6)) == R(-1, 2));
    CHECK(PiecewiseLinearFn::constant(R(5))(R(99)) == R(5));
}

TEST_CASE("canonical form makes equality pointwise") {
    PiecewiseLinearFn a({{R(0), R(0)}, {R(1), R(1)}, {R(2), R(2)}}, R(1), R(1));
    CHECK(a == PiecewiseLinearFn::linear(R(1)));
    CHECK(a.breakpoints().size() == 1);

    PiecewiseLinearFn b({{R(5), R(2)}}, R(0), R(0));
    CHECK(b == PiecewiseLinearFn::constant(R(2)));

    PiecewiseLinearFn c({{R(-1), R(1)}, {R(0), R(0)}, {R(1), R(1)}}, R(-1), R(1));
    CHECK(c == PiecewiseLinearFn::absolute());
}

TEST_CASE("pointwise arithmetic agrees with evaluation") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        PiecewiseLinearFn f = random_kernel_entry(rng, 5, false);
        PiecewiseLinearFn g = random_kernel_entry(rng, 5, false);
        PiecewiseLinearFn sum = f + g;
        PiecewiseLinearFn diff = f - g;
        PiecewiseLinearFn mx = f.max_with(g);
        PiecewiseLinearFn mn = f.min_with(g);
        PiecewiseLinearFn sc = f.scaled(R(-3, 2));
        for (const auto& t : probe_points(rng, f, g)) {
            CHECK(sum(t) == f(t) + g(t));
            CHECK(diff(t) == f(t) - g(t));
            CHECK(mx(t) == max(f(t), g(t)));
            CHECK(mn(t) == min(f(t), g(t)));
            CHECK(sc(t) == f(t) * R(-3, 2));
            CHECK(f.absolute_value()(t) == f(t).abs());
            CHECK(f.positive_part()(t) == max(f(t), R(0)));
        }
        CHECK(mx + mn == f + g);  // max + min identity, structurally after canonicalization
    }
}

TEST_CASE("max handles ray crossings") {
    PiecewiseLinearFn f = PiecewiseLinearFn::linear(R(1));
    PiecewiseLinearFn g = PiecewiseLinearFn::constant(R(1));
    PiecewiseLinearFn m = f.max_with(g);
    CHECK(m(R(0)) == R(1));
    CHECK(m(R(1)) == R(1));
    CHECK(m(R(2)) == R(2));
    CHECK(m(R(-50)) == R(1));
    // The crossing at t = 1 must be a breakpoint.
    bool has_crossing = false;
    for (const auto& b : m.breakpoints()) has_crossing |= b.first == R(1);
    CHECK(has_crossing);
}

TEST_CASE("nonnegativity is decided symbolically") {
    CHECK(PiecewiseLinearFn::absolute().is_nonnegative());
    CHECK_FALSE(PiecewiseLinearFn::linear(R(1)).is_nonnegative());
    // The hat rises on the left ray (slope 1), so it dips below zero out there.
    CHECK_FALSE(hat().is_nonnegative());
    REQUIRE(hat().negative_point().has_value());
    CHECK(hat()(*hat().negative_point()) < R(0));

    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        PiecewiseLinearFn f = random_kernel_entry(rng, 5, false);
        auto bad = f.negative_point();
        if (f.is_nonnegative()) {
            CHECK_FALSE(bad.has_value());
        } else {
            REQUIRE(bad.has_value());
            CHECK(f(*bad) < R(0));
        }
    }
}

TEST_CASE("range over an interval") {
    PiecewiseLinearFn f = hat();
    auto [mn, mx] = f.range_on(R(-2), R(3));
    CHECK(mn == R(-1));
    CHECK(mx == R(2));
    auto [mn2, mx2] = f.range_on(R(0), R(1));
    CHECK(mn2 == R(1));
    CHECK(mx2 == R(2));
    CHECK_THROWS_AS(f.range_on(R(1), R(0)), std::invalid_argument);
}

TEST_CASE("zero intervals of nonnegative functions") {
    CHECK_THROWS_AS(PiecewiseLinearFn::linear(R(1)).zero_intervals(), std::invalid_argument);

    auto z1 = PiecewiseLinearFn::absolute().zero_intervals();
    REQUIRE(z1.size() == 1);
    CHECK(*z1[0].lo == R(0));
    CHECK(*z1[0].hi == R(0));

    // max(t, 0): zero on the whole left ray.
    auto relu = PiecewiseLinearFn::linear(R(1)).positive_part();
    auto z2 = relu.zero_intervals();
    REQUIRE(z2.size() == 1);
    CHECK_FALSE(z2[0].lo.has_value());
    CHECK(*z2[0].hi == R(0));

    // Plateau: 0 on [1, 2], positive elsewhere.
    PiecewiseLinearFn plateau({{R(1), R(0)}, {R(2), R(0)}}, R(-1), R(3));
    auto z3 = plateau.zero_intervals();
    REQUIRE(z3.size() == 1);
    CHECK(*z3[0].lo == R(1));
    CHECK(*z3[0].hi == R(2));

    CHECK(PiecewiseLinearFn::zero().zero_intervals().size() == 1);
    CHECK_FALSE(PiecewiseLinearFn::zero().zero_intervals()[0].lo.has_value());
    CHECK_FALSE(PiecewiseLinearFn::zero().zero_intervals()[0].hi.has_value());
}
