#ifndef URYSON_SAMPLING_HPP
#define URYSON_SAMPLING_HPP

#include "uryson/lattice.hpp"
#include "uryson/operator.hpp"
#include "uryson/piecewise_linear.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace uryson {

/// Deterministic RNG for sampled checks. All derived draws go through the
/// explicit helpers below, so identical seeds give identical sample streams
/// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    /// Uniform-ish index in [0, n).
    std::size_t index(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
    long int_in(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return next() & 1u; }

    /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    /// Heights are kept small so that the epsilon-grid feasibility thresholds
    /// of the projection formulas stay far above 2^-20.
    Rational rational(long max_num = 12, long max_den = 2) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }
    Rational nonnegative_rational(long max_num = 12, long max_den = 2) {
        return Rational(int_in(0, max_num), int_in(1, max_den));
    }

private:
    std::mt19937_64 gen_;
};

/// Random lattice element of the given model. EcSequence elements get a
/// prefix of length <= resolution and a (possibly zero) tail.
LatticeElement random_element(Rng& rng, const DomainDesc& domain, std::size_t resolution = 8);

/// Random positive element (all coordinates and tail >= 0).
LatticeElement random_positive_element(Rng& rng, const DomainDesc& domain, std::size_t resolution = 8);

/// Random disjoint pair: supports split over the explicit coordinates (and
/// the tail slot on sequence models).
std::pair<LatticeElement, LatticeElement> random_disjoint_pair(Rng& rng, const DomainDesc& domain,
                                                               std::size_t resolution = 8);

/// Random kernel entry: integer breakpoint abscissas in [-6, 6] containing
/// t = 0, small rational values and slopes, f(0) = 0. `nonnegative` clamps
/// to the positive cone (values >= 0, left slope <= 0, right slope >= 0).
PiecewiseLinearFn random_kernel_entry(Rng& rng, std::size_t max_breakpoints, bool nonnegative);

/// Random kernel operator R^n -> R^m (pure kernel).
UrysonOperator random_kernel_operator(Rng& rng, std::size_t n, std::size_t m, std::size_t max_breakpoints,
                                      bool positive);

/// Random operator on the sequence lattice with `columns` kernel columns and
/// optionally a tail column.
UrysonOperator random_ecseq_operator(Rng& rng, std::size_t columns, std::size_t m,
                                     std::size_t max_breakpoints, bool positive, bool with_tail);

}  // namespace uryson

#endif
