#ifndef URYSON_TESTS_HELPERS_HPP
#define URYSON_TESTS_HELPERS_HPP

#include "uryson/operator.hpp"
#include "uryson/piecewise_linear.hpp"

#include <vector>

namespace testutil {

inline uryson::Rational R(long p, long q = 1) { return uryson::Rational(p, q); }

inline uryson::LatticeElement fv(const std::vector<long>& coords) {
    std::vector<uryson::Rational> out;
    for (long c : coords) out.emplace_back(c);
    return uryson::LatticeElement::finite(std::move(out));
}

inline uryson::LatticeElement ecs(const std::vector<long>& prefix, long tail) {
    std::vector<uryson::Rational> out;
    for (long c : prefix) out.emplace_back(c);
    return uryson::LatticeElement::ec(std::move(out), uryson::Rational(tail));
}

inline uryson::PiecewiseLinearFn id_fn() { return uryson::PiecewiseLinearFn::linear(R(1)); }
inline uryson::PiecewiseLinearFn neg_id_fn() { return uryson::PiecewiseLinearFn::linear(R(-1)); }
inline uryson::PiecewiseLinearFn abs_fn() { return uryson::PiecewiseLinearFn::absolute(); }

inline uryson::UrysonOperator row_operator(std::vector<uryson::PiecewiseLinearFn> entries) {
    std::size_t n = entries.size();
    return uryson::UrysonOperator(uryson::DomainDesc::finite(n), 1, {std::move(entries)});
}

/// diag(|t|) on R^n: positive, identity on the positive cone.
inline uryson::UrysonOperator abs_diag(std::size_t n) {
    std::vector<std::vector<uryson::PiecewiseLinearFn>> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<uryson::PiecewiseLinearFn> row(n, uryson::PiecewiseLinearFn::zero());
        row[i] = abs_fn();
        kernel.push_back(std::move(row));
    }
    return uryson::UrysonOperator(uryson::DomainDesc::finite(n), n, std::move(kernel));
}

/// phi(x) = sum_j |x_j| as a scalar operator.
inline uryson::UrysonOperator abs_sum(std::size_t n) {
    return row_operator(std::vector<uryson::PiecewiseLinearFn>(n, abs_fn()));
}

}  // namespace testutil

#endif
