#ifndef URYSON_OPERATOR_HPP
#define URYSON_OPERATOR_HPP

#include "uryson/lattice.hpp"
#include "uryson/piecewise_linear.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uryson {

/// Domain model of an operator: R^n, or the eventually-constant sequence
/// lattice with kernel columns on the first `columns` coordinates.
struct DomainDesc {
    LatticeElement::Kind kind = LatticeElement::Kind::FiniteVector;
    std::size_t columns = 0;

    static DomainDesc finite(std::size_t n) { return {LatticeElement::Kind::FiniteVector, n}; }
    static DomainDesc ecseq(std::size_t j) { return {LatticeElement::Kind::EcSequence, j}; }

    bool is_finite() const { return kind == LatticeElement::Kind::FiniteVector; }
    bool accepts(const LatticeElement& x) const {
        if (x.kind() != kind) return false;
        return !is_finite() || x.dim() == columns;
    }
    bool operator==(const DomainDesc& o) const { return kind == o.kind && columns == o.columns; }
    std::string str() const;
};

/// Orthogonally additive order-bounded operator T: E -> R^m, represented by
/// an m x columns matrix of scalar kernel functions with T_{i,j}(0) = 0,
/// applied coordinate-wise and summed per output coordinate:
///     (Tx)_i = sum_j T_{i,j}(x_j)  [+ tail_i(tail(x)) on sequence domains].
/// The optional tail column is what makes genuinely singular operators
/// representable on the sequence lattice.
class UrysonOperator {
public:
    UrysonOperator(DomainDesc domain, std::size_t codomain, std::vector<std::vector<PiecewiseLinearFn>> kernel,
                   std::optional<std::vector<PiecewiseLinearFn>> tail_column = std::nullopt);

    static UrysonOperator zero(DomainDesc domain, std::size_t codomain);

    const DomainDesc& domain() const { return domain_; }
    std::size_t codomain() const { return codomain_; }
    const std::vector<std::vector<PiecewiseLinearFn>>& kernel() const { return kernel_; }
    const std::optional<std::vector<PiecewiseLinearFn>>& tail_column() const { return tail_column_; }
    bool pure_kernel() const { return !tail_column_.has_value(); }

    LatticeElement apply(const LatticeElement& x) const;

    /// Tx >= 0 for all x, decided symbolically from the representation.
    bool is_positive() const;
    /// When not positive, an x with some (Tx)_i < 0.
    std::optional<LatticeElement> negativity_witness() const;

    UrysonOperator operator+(const UrysonOperator& o) const;
    UrysonOperator operator-(const UrysonOperator& o) const;
    UrysonOperator scaled(const Rational& c) const;
    /// Entry-wise pointwise lattice operations; exact materializations of the
    /// operator-lattice join/meet/parts for this representation class.
    UrysonOperator entrywise_max(const UrysonOperator& o) const;
    UrysonOperator entrywise_min(const UrysonOperator& o) const;
    UrysonOperator entrywise_positive_part() const;
    UrysonOperator entrywise_negative_part() const;
    UrysonOperator entrywise_absolute() const;

    /// Kernel-only / tail-only parts of the representation.
    UrysonOperator kernel_part() const;
    UrysonOperator tail_part() const;

    /// T dominates S in the operator order (T - S positive).
    bool dominates(const UrysonOperator& o) const;

    bool operator==(const UrysonOperator& o) const;
    bool operator!=(const UrysonOperator& o) const { return !(*this == o); }

    /// Exact bounding box [lo, hi] in R^m of the image of the order interval
    /// [-bound, bound], from per-entry range analysis.
    std::pair<LatticeElement, LatticeElement> image_box(const LatticeElement& bound) const;

    std::string str() const;

private:
    DomainDesc domain_;
    std::size_t codomain_;
    std::vector<std::vector<PiecewiseLinearFn>> kernel_;
    std::optional<std::vector<PiecewiseLinearFn>> tail_column_;

    static std::pair<UrysonOperator, UrysonOperator> aligned(const UrysonOperator& a, const UrysonOperator& b);
    UrysonOperator map_entries(const std::function<PiecewiseLinearFn(const PiecewiseLinearFn&)>& f) const;
};

/// phi tensor u: e |-> u * phi(e) with scalar-valued phi (codomain 1) and
/// u in F+. Materializes to the kernel representation exactly.
struct OneDimensionalOperator {
    UrysonOperator phi;
    LatticeElement u;

    OneDimensionalOperator(UrysonOperator phi_, LatticeElement u_);
    UrysonOperator materialize() const;
};

UrysonOperator one_dimensional(const UrysonOperator& phi, const LatticeElement& u);

/// Discrete Uryson integral operator over finite index sets: entry (s, t) of
/// the result is mu(t) * K(s, t, .). Requires positive weights and
/// K(s, t, 0) = 0 for every entry.
UrysonOperator from_integral_kernel(const std::vector<std::vector<PiecewiseLinearFn>>& kernel_table,
                                    const std::vector<Rational>& mu);

/// Value map of an operator; used wherever checks must also run against
/// non-representable evaluators (projections of operators, corrupted
/// negative controls).
using OperatorFn = std::function<LatticeElement(const LatticeElement&)>;
OperatorFn as_fn(const UrysonOperator& op);

struct CheckOutcome {
    bool passed = true;
    std::size_t trials = 0;
    std::string witness;  // nonempty iff failed
};

/// Samples disjoint pairs (x, y) and asserts T(x+y) = Tx + Ty exactly.
CheckOutcome check_orthogonal_additivity(const OperatorFn& op, const DomainDesc& domain, std::size_t trials,
                                         std::uint64_t seed, std::size_t resolution = 8);
CheckOutcome check_orthogonal_additivity(const UrysonOperator& op, std::size_t trials, std::uint64_t seed,
                                         std::size_t resolution = 8);

}  // namespace uryson

#endif
