#include "uryson/operator.hpp"

#include "uryson/sampling.hpp"
#include "uryson/suites.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace uryson;
using testutil::R;
using testutil::fv;
using testutil::ecs;

TEST_CASE("kernel evaluation") {
    // (Tx)_1 = x_1 - x_2
    UrysonOperator T = testutil::row_operator({testutil::id_fn(), testutil::neg_id_fn()});
    CHECK(T.apply(fv({1, 1})) == fv({0}));
    CHECK(T.apply(fv({3, 1})) == fv({2}));
    CHECK(T.apply(fv({0, 0})).is_zero());
    CHECK_THROWS_AS(T.apply(fv({1})), std::invalid_argument);
    CHECK_THROWS_AS(T.apply(ecs({1}, 0)), std::invalid_argument);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        UrysonOperator op = random_kernel_operator(rng, 1 + rng.index(4), 1 + rng.index(4), 5, false);
        CHECK(op.apply(LatticeElement::finite(std::vector<Rational>(op.domain().columns, R(0)))).is_zero());
    }
}

TEST_CASE("sequence domain with a tail column") {
    UrysonOperator T(DomainDesc::ecseq(1), 1, {{testutil::id_fn()}},
                     std::vector<PiecewiseLinearFn>{testutil::id_fn()});
    CHECK(T.apply(ecs({5}, 3)) == fv({8}));
    CHECK(T.apply(ecs({}, 0)).is_zero());
    // Values beyond the kernel columns only enter through the tail.
    CHECK(T.apply(ecs({5, 100}, 3)) == fv({8}));

    CHECK(T.kernel_part().apply(ecs({5}, 3)) == fv({5}));
    CHECK(T.tail_part().apply(ecs({5}, 3)) == fv({3}));
}

TEST_CASE("representation invariants are enforced") {
    PiecewiseLinearFn bad({{R(0), R(1)}}, R(0), R(0));  // value 1 at t = 0
    CHECK_THROWS_WITH_AS(UrysonOperator(DomainDesc::finite(1), 1, {{bad}}),
                         doctest::Contains("(1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(UrysonOperator(DomainDesc::finite(1), 1,
                                   {{testutil::id_fn()}}, std::vector<PiecewiseLinearFn>{testutil::id_fn()}),
                    std::invalid_argument);  // tail on a finite domain
    CHECK_THROWS_AS(UrysonOperator(DomainDesc::finite(2), 1, {{testutil::id_fn()}}), std::invalid_argument);
}

TEST_CASE("discrete integral construction") {
    auto K = [](const PiecewiseLinearFn& f) { return std::vector<std::vector<PiecewiseLinearFn>>{{f}}; };
    UrysonOperator T1 = from_integral_kernel(K(testutil::id_fn()), {R(1)});
    CHECK(T1.apply(fv({3})) == fv({3}));

    UrysonOperator T2 = from_integral_kernel(K(testutil::id_fn()), {R(2)});
    CHECK(T2.apply(fv({3})) == fv({6}));

    PiecewiseLinearFn c0_violation({{R(0), R(1)}}, R(0), R(0));
    CHECK_THROWS_AS(from_integral_kernel(K(c0_violation), {R(1)}), std::invalid_argument);
    CHECK_THROWS_AS(from_integral_kernel(K(testutil::id_fn()), {R(0)}), std::invalid_argument);
    CHECK_THROWS_AS(from_integral_kernel(K(testutil::id_fn()), {R(-1)}), std::invalid_argument);

    // Weighted summation oracle on random data.
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng.index(3), m = 1 + rng.index(3);
        std::vector<std::vector<PiecewiseLinearFn>> table;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<PiecewiseLinearFn> row;
            for (std::size_t j = 0; j < n; ++j) row.push_back(random_kernel_entry(rng, 4, false));
            table.push_back(std::move(row));
        }
        std::vector<Rational> mu;
        for (std::size_t j = 0; j < n; ++j) mu.push_back(Rational(rng.int_in(1, 5), rng.int_in(1, 3)));
        UrysonOperator T = from_integral_kernel(table, mu);
        for (int k = 0; k < 5; ++k) {
            LatticeElement x = random_element(rng, T.domain());
            std::vector<Rational> direct;
            for (std::size_t i = 0; i < m; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < n; ++j) acc += mu[j] * table[i][j](x.at(j));
                direct.push_back(acc);
            }
            CHECK(T.apply(x) == LatticeElement::finite(direct));
        }
    }
}

TEST_CASE("positivity decision and witnesses") {
    CHECK(testutil::abs_diag(2).is_positive());
    CHECK_FALSE(testutil::row_operator({testutil::id_fn()}).is_positive());

    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        UrysonOperator T = random_kernel_operator(rng, 1 + rng.index(3), 1 + rng.index(3), 5, false);
        if (T.is_positive()) {
            for (int k = 0; k < 20; ++k) {
                LatticeElement v = T.apply(random_element(rng, T.domain()));
                CHECK(LatticeElement::zero_like(v).leq(v));
            }
        } else {
            auto witness = T.negativity_witness();
            REQUIRE(witness.has_value());
            LatticeElement v = T.apply(*witness);
            CHECK_FALSE(LatticeElement::zero_like(v).leq(v));
        }
    }

    // 10^4 positive-cone samples across operators declared positive.
    std::size_t cone_samples = 0;
    while (cone_samples < 10000) {
        UrysonOperator T = random_kernel_operator(rng, 1 + rng.index(3), 1 + rng.index(3), 5, true);
        REQUIRE(T.is_positive());
        for (int k = 0; k < 50; ++k, ++cone_samples) {
            LatticeElement v = T.apply(random_element(rng, T.domain()));
            CHECK(LatticeElement::zero_like(v).leq(v));
        }
    }

    // Tail-column witnesses route through the tail slot.
    UrysonOperator T(DomainDesc::ecseq(1), 1, {{testutil::abs_fn()}},
                     std::vector<PiecewiseLinearFn>{testutil::id_fn()});
    CHECK_FALSE(T.is_positive());
    auto w = T.negativity_witness();
    REQUIRE(w.has_value());
    CHECK_FALSE(LatticeElement::zero_like(T.apply(*w)).leq(T.apply(*w)));
}

TEST_CASE("orthogonal additivity holds for the representation") {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        UrysonOperator T = random_kernel_operator(rng, 1 + rng.index(4), 1 + rng.index(4), 5, false);
        CheckOutcome out = check_orthogonal_additivity(T, 200, rng.next());
        CHECK(out.passed);
        UrysonOperator S = random_ecseq_operator(rng, 1 + rng.index(3), 2, 4, false, true);
        CheckOutcome out2 = check_orthogonal_additivity(S, 200, rng.next());
        CHECK(out2.passed);
    }
}

TEST_CASE("corrupted evaluator fails the additivity check with a witness") {
    UrysonOperator T = testutil::abs_diag(2);
    CheckOutcome out = check_orthogonal_additivity(corrupt_with_cross_term(T), T.domain(), 200, 42);
    CHECK_FALSE(out.passed);
    CHECK_FALSE(out.witness.empty());
}

TEST_CASE("one-dimensional operators") {
    UrysonOperator phi = testutil::abs_sum(2);
    UrysonOperator S = one_dimensional(phi, fv({1, 0}));
    CHECK(S.apply(fv({1, 1})) == fv({2, 0}));
    CHECK(S.apply(fv({-1, 2})) == fv({3, 0}));

    CHECK(one_dimensional(phi, fv({0, 0})).apply(fv({7, -7})).is_zero());
    UrysonOperator zero_phi(DomainDesc::finite(2), 1,
                            {{PiecewiseLinearFn::zero(), PiecewiseLinearFn::zero()}});
    CHECK(one_dimensional(zero_phi, fv({3, 4})).apply(fv({7, -7})).is_zero());

    CHECK_THROWS_AS(one_dimensional(testutil::abs_diag(2), fv({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(OneDimensionalOperator(testutil::abs_diag(2), fv({1, 0})), std::invalid_argument);

    OneDimensionalOperator od(phi, fv({2, 1}));
    for (int a = -2; a <= 2; ++a)
        CHECK(od.materialize().apply(fv({a, 3})) == fv({2 * (std::abs(a) + 3), std::abs(a) + 3}));
}

TEST_CASE("order interval image boxes") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng.index(3), m = 1 + rng.index(3);
        UrysonOperator T = random_kernel_operator(rng, n, m, 5, false);
        LatticeElement bound = random_positive_element(rng, T.domain());
        auto [lo, hi] = T.image_box(bound);
        for (int k = 0; k < 50; ++k) {
            // x drawn from [-bound, bound] coordinate-wise.
            std::vector<Rational> coords;
            for (std::size_t j = 0; j < n; ++j) {
                Rational b = bound.at(j);
                Rational t = Rational(rng.int_in(-8, 8), 8);
                coords.push_back(b * t);
            }
            LatticeElement x = LatticeElement::finite(std::move(coords));
            LatticeElement v = T.apply(x);
            CHECK(lo.leq(v));
            CHECK(v.leq(hi));
        }
    }
    CHECK_THROWS_AS(testutil::abs_diag(2).image_box(fv({-1, 1})), std::invalid_argument);
}

TEST_CASE("operator arithmetic and domination") {
    Rng rng(37);
    UrysonOperator T = random_kernel_operator(rng, 3, 2, 4, false);
    UrysonOperator S = random_kernel_operator(rng, 3, 2, 4, false);
    for (int k = 0; k < 20; ++k) {
        LatticeElement x = random_element(rng, T.domain());
        CHECK((T + S).apply(x) == T.apply(x) + S.apply(x));
        CHECK((T - S).apply(x) == T.apply(x) - S.apply(x));
        CHECK(T.scaled(R(3, 2)).apply(x) == T.apply(x).scaled(R(3, 2)));
        CHECK(T.entrywise_absolute().is_positive());
    }
    UrysonOperator P = random_kernel_operator(rng, 3, 2, 4, true);
    CHECK(P.scaled(R(2)).dominates(P));
    CHECK_FALSE(P.dominates(P.scaled(R(2))));

    // Widening aligns mismatched sequence column supports.
    UrysonOperator A(DomainDesc::ecseq(1), 1, {{testutil::abs_fn()}});
    UrysonOperator B(DomainDesc::ecseq(2), 1, {{PiecewiseLinearFn::zero(), testutil::abs_fn()}},
                     std::vector<PiecewiseLinearFn>{testutil::abs_fn()});
    UrysonOperator sum = A + B;
    CHECK(sum.apply(ecs({1, -2}, 3)) == fv({1 + 2 + 3}));
}
