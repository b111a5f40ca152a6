#include "uryson/sampling.hpp"

#include <algorithm>
#include <set>

namespace uryson {

namespace {

Rational maybe_zero_rational(Rng& rng) {
    if (rng.index(4) == 0) return Rational(0);
    return rng.rational();
}

}  // namespace

LatticeElement random_element(Rng& rng, const DomainDesc& domain, std::size_t resolution) {
    if (domain.is_finite()) {
        std::vector<Rational> coords;
        coords.reserve(domain.columns);
        for (std::size_t i = 0; i < domain.columns; ++i) coords.push_back(maybe_zero_rational(rng));
        return LatticeElement::finite(std::move(coords));
    }
    std::size_t len = rng.index(resolution + 1);
    std::vector<Rational> pre;
    pre.reserve(len);
    for (std::size_t i = 0; i < len; ++i) pre.push_back(maybe_zero_rational(rng));
    Rational tail = rng.coin() ? Rational(0) : rng.rational();
    return LatticeElement::ec(std::move(pre), std::move(tail));
}

LatticeElement random_positive_element(Rng& rng, const DomainDesc& domain, std::size_t resolution) {
    return random_element(rng, domain, resolution).abs();
}

std::pair<LatticeElement, LatticeElement> random_disjoint_pair(Rng& rng, const DomainDesc& domain,
                                                               std::size_t resolution) {
    std::size_t len = domain.is_finite() ? domain.columns : resolution;
    std::vector<Rational> a(len, Rational(0)), b(len, Rational(0));
    for (std::size_t i = 0; i < len; ++i) {
        if (rng.coin())
            a[i] = maybe_zero_rational(rng);
        else
            b[i] = maybe_zero_rational(rng);
    }
    if (domain.is_finite()) return {LatticeElement::finite(std::move(a)), LatticeElement::finite(std::move(b))};
    Rational ta(0), tb(0);
    if (rng.coin())
        ta = maybe_zero_rational(rng);
    else
        tb = maybe_zero_rational(rng);
    // A nonzero tail owns every coordinate beyond the resolution, so the
    // other side must not reach past it with explicit entries either; the
    // construction above already guarantees that (prefixes end at len).
    return {LatticeElement::ec(std::move(a), std::move(ta)), LatticeElement::ec(std::move(b), std::move(tb))};
}

PiecewiseLinearFn random_kernel_entry(Rng& rng, std::size_t max_breakpoints, bool nonnegative) {
    std::size_t want = 1 + rng.index(max_breakpoints);
    std::set<long> ts{0};
    while (ts.size() < want) ts.insert(rng.int_in(-6, 6));
    std::vector<PiecewiseLinearFn::Breakpoint> bps;
    for (long t : ts) {
        Rational v = t == 0 ? Rational(0) : rng.rational(12, 3);
        if (nonnegative) v = v.abs();
        bps.push_back({Rational(t), std::move(v)});
    }
    Rational ls = rng.rational(6, 3), rs = rng.rational(6, 3);
    if (nonnegative) {
        ls = -ls.abs();
        rs = rs.abs();
    }
    return PiecewiseLinearFn(std::move(bps), std::move(ls), std::move(rs));
}

UrysonOperator random_kernel_operator(Rng& rng, std::size_t n, std::size_t m, std::size_t max_breakpoints,
                                      bool positive) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    kernel.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<PiecewiseLinearFn> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(random_kernel_entry(rng, max_breakpoints, positive));
        kernel.push_back(std::move(row));
    }
    return UrysonOperator(DomainDesc::finite(n), m, std::move(kernel));
}

UrysonOperator random_ecseq_operator(Rng& rng, std::size_t columns, std::size_t m,
                                     std::size_t max_breakpoints, bool positive, bool with_tail) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    kernel.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<PiecewiseLinearFn> row;
        row.reserve(columns);
        for (std::size_t j = 0; j < columns; ++j)
            row.push_back(random_kernel_entry(rng, max_breakpoints, positive));
        kernel.push_back(std::move(row));
    }
    std::optional<std::vector<PiecewiseLinearFn>> tail;
    if (with_tail) {
        std::vector<PiecewiseLinearFn> col;
        col.reserve(m);
        for (std::size_t i = 0; i < m; ++i) col.push_back(random_kernel_entry(rng, max_breakpoints, positive));
        tail = std::move(col);
    }
    return UrysonOperator(DomainDesc::ecseq(columns), m, std::move(kernel), std::move(tail));
}

}  // namespace uryson
