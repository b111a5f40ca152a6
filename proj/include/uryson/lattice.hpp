#ifndef URYSON_LATTICE_HPP
#define URYSON_LATTICE_HPP

#include "uryson/rational.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace uryson {

/// A point of one of the two concrete vector lattices:
///   - FiniteVector: exact-rational vector in R^n (coordinate-wise order);
///   - EcSequence: eventually-constant sequence, stored as an explicit
///     prefix plus the constant tail value.
///
/// EcSequence values are kept canonical: the last prefix entry differs from
/// the tail, or the prefix is empty. Equality is therefore structural.
class LatticeElement {
public:
    enum class Kind { FiniteVector, EcSequence };

    static LatticeElement finite(std::vector<Rational> coords);
    static LatticeElement ec(std::vector<Rational> prefix, Rational tail);
    /// Zero of the same lattice model as `like`.
    static LatticeElement zero_like(const LatticeElement& like);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::FiniteVector; }
    bool is_ec() const { return kind_ == Kind::EcSequence; }
    bool same_model(const LatticeElement& o) const;

    /// FiniteVector only.
    std::size_t dim() const;
    const std::vector<Rational>& coords() const;

    /// EcSequence only.
    const std::vector<Rational>& prefix() const;
    const Rational& tail() const;

    /// Value at 0-based coordinate i; for EcSequence, tail beyond the prefix.
    const Rational& at(std::size_t i) const;
    /// Number of explicitly stored coordinates (n, or prefix length).
    std::size_t explicit_size() const { return data_.size(); }

    bool is_zero() const;

    LatticeElement operator+(const LatticeElement& o) const;
    LatticeElement operator-(const LatticeElement& o) const;
    LatticeElement operator-() const;
    LatticeElement scaled(const Rational& c) const;
    LatticeElement abs() const;
    LatticeElement min_with(const LatticeElement& o) const;
    LatticeElement max_with(const LatticeElement& o) const;
    /// Coordinate-wise <=.
    bool leq(const LatticeElement& o) const;

    bool operator==(const LatticeElement& o) const;
    bool operator!=(const LatticeElement& o) const { return !(*this == o); }
    /// Deterministic total order (model, then lexicographic); used for set
    /// deduplication and stable enumeration, not the lattice order.
    bool operator<(const LatticeElement& o) const;

    std::string str() const;

private:
    LatticeElement(Kind k, std::vector<Rational> data, Rational tail)
        : kind_(k), data_(std::move(data)), tail_(std::move(tail)) {}
    void canonicalize_ec();
    static LatticeElement pointwise(const LatticeElement& a, const LatticeElement& b,
                                    const std::function<Rational(const Rational&, const Rational&)>& f);

    Kind kind_;
    std::vector<Rational> data_;  // coords, or prefix
    Rational tail_;               // EcSequence only
};

std::ostream& operator<<(std::ostream& os, const LatticeElement& x);

/// Band projection on F = R^m: a coordinate mask. Complement gives rho^perp.
class OrderProjection {
public:
    OrderProjection(std::size_t m, std::uint64_t bits);
    static OrderProjection full(std::size_t m);
    static OrderProjection none(std::size_t m);
    static OrderProjection of_coords(std::size_t m, const std::vector<std::size_t>& coords1based);

    std::size_t space_dim() const { return m_; }
    std::uint64_t bits() const { return bits_; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    bool empty() const { return bits_ == 0; }

    OrderProjection complement() const;
    bool disjoint_with(const OrderProjection& o) const { return (bits_ & o.bits_) == 0; }

    /// Zeroes the coordinates outside the mask. `x` must be a FiniteVector in R^m.
    LatticeElement apply(const LatticeElement& x) const;

    bool operator==(const OrderProjection& o) const { return m_ == o.m_ && bits_ == o.bits_; }
    std::string str() const;

private:
    std::size_t m_;
    std::uint64_t bits_;
};

/// All 2^m order projections of R^m, in increasing bit-pattern order.
std::vector<OrderProjection> all_order_projections(std::size_t m);

/// Pairwise disjoint nonempty masks covering {1..m}.
class PartitionOfUnity {
public:
    explicit PartitionOfUnity(std::vector<OrderProjection> blocks);
    const std::vector<OrderProjection>& blocks() const { return blocks_; }
    std::size_t space_dim() const { return blocks_.front().space_dim(); }
    std::string str() const;

private:
    std::vector<OrderProjection> blocks_;
};

/// Enumerates all set partitions of {1..m} into at most max_blocks blocks,
/// grouped by block count ascending (restricted-growth-string order within
/// each count). The visitor returns false to stop early.
void for_each_partition_of_unity(std::size_t m, std::size_t max_blocks,
                                 const std::function<bool(const PartitionOfUnity&)>& visit);
std::vector<PartitionOfUnity> partitions_of_unity(std::size_t m, std::size_t max_blocks);

/// An increasing chain of fragments of `target`: steps[k] is a fragment of
/// steps[k+1] and of target.
class FragmentChain {
public:
    FragmentChain(std::vector<LatticeElement> steps, LatticeElement target);
    const std::vector<LatticeElement>& steps() const { return steps_; }
    const LatticeElement& target() const { return target_; }

    /// True when the residual target - last step has no explicit coordinate
    /// left below `resolution` (FiniteVector: residual is exactly zero); the
    /// canonical truncation continuation then order-converges to the target,
    /// dominated by the tails u_N that decrease to 0.
    bool converges_at(std::size_t resolution) const;

private:
    std::vector<LatticeElement> steps_;
    LatticeElement target_;
};

/// Canonical prefix chain e^(1) <= ... <= e^(resolution): truncations of e
/// with the tail zeroed. For FiniteVector returns the single-step chain {e}.
FragmentChain canonical_chain(const LatticeElement& e, std::size_t resolution);

// --- fragment calculus ------------------------------------------------------

/// |x| /\ |y| = 0, coordinate-wise (EcSequence: explicit coordinates and tails).
bool disjoint(const LatticeElement& x, const LatticeElement& y);

/// z is a fragment (component) of x: z disjoint from x - z.  Written z ⊑ x.
bool is_fragment(const LatticeElement& z, const LatticeElement& x);

/// All fragments of x. FiniteVector: every coordinate restriction, deduplicated.
/// EcSequence: restrictions of the first `resolution` coordinates and of the
/// tail; requires resolution >= prefix length. Deterministically ordered.
std::vector<LatticeElement> fragments(const LatticeElement& x, std::size_t resolution = 0);

/// All pairs (g, h) with g + h = f and g ⊥ h; equals {(g, f-g) : g fragment of f}.
std::vector<std::pair<LatticeElement, LatticeElement>> disjoint_partitions(const LatticeElement& f,
                                                                           std::size_t resolution = 0);

/// Riesz split of a fragment z of x + y (x ⊥ y) into z1 ⊑ x, z2 ⊑ y:
/// z1 keeps z where x is nonzero. Preconditions checked.
std::pair<LatticeElement, LatticeElement> fragment_split(const LatticeElement& z, const LatticeElement& x,
                                                         const LatticeElement& y);

/// Projection on the band {g}^⊥⊥ of F = R^m: the support mask of g.
OrderProjection element_band_projection(const LatticeElement& g);

}  // namespace uryson

#endif
