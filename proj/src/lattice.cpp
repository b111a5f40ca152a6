#include "uryson/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace uryson {

// --- LatticeElement ----------------------------------------------------------

LatticeElement LatticeElement::finite(std::vector<Rational> coords) {
    return LatticeElement(Kind::FiniteVector, std::move(coords), Rational(0));
}

LatticeElement LatticeElement::ec(std::vector<Rational> prefix, Rational tail) {
    LatticeElement x(Kind::EcSequence, std::move(prefix), std::move(tail));
    x.canonicalize_ec();
    return x;
}

LatticeElement LatticeElement::zero_like(const LatticeElement& like) {
    if (like.is_finite()) return finite(std::vector<Rational>(like.dim(), Rational(0)));
    return ec({}, Rational(0));
}

void LatticeElement::canonicalize_ec() {
    while (!data_.empty() && data_.back() == tail_) data_.pop_back();
}

bool LatticeElement::same_model(const LatticeElement& o) const {
    if (kind_ != o.kind_) return false;
    if (is_finite()) return dim() == o.dim();
    return true;
}

std::size_t LatticeElement::dim() const {
    if (!is_finite()) throw std::invalid_argument("dim(): not a finite vector");
    return data_.size();
}

const std::vector<Rational>& LatticeElement::coords() const {
    if (!is_finite()) throw std::invalid_argument("coords(): not a finite vector");
    return data_;
}

const std::vector<Rational>& LatticeElement::prefix() const {
    if (!is_ec()) throw std::invalid_argument("prefix(): not an ec-sequence");
    return data_;
}

const Rational& LatticeElement::tail() const {
    if (!is_ec()) throw std::invalid_argument("tail(): not an ec-sequence");
    return tail_;
}

const Rational& LatticeElement::at(std::size_t i) const {
    if (i < data_.size()) return data_[i];
    if (is_ec()) return tail_;
    throw std::out_of_range("LatticeElement::at");
}

bool LatticeElement::is_zero() const {
    for (const auto& c : data_)
        if (!c.is_zero()) return false;
    return is_finite() || tail_.is_zero();
}

LatticeElement LatticeElement::pointwise(const LatticeElement& a, const LatticeElement& b,
                                         const std::function<Rational(const Rational&, const Rational&)>& f) {
    if (!a.same_model(b)) throw std::invalid_argument("lattice model mismatch");
    std::size_t len = std::max(a.data_.size(), b.data_.size());
    std::vector<Rational> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(f(a.at(i), b.at(i)));
    if (a.is_finite()) return finite(std::move(out));
    return ec(std::move(out), f(a.tail_, b.tail_));
}

LatticeElement LatticeElement::operator+(const LatticeElement& o) const {
    return pointwise(*this, o, [](const Rational& u, const Rational& v) { return u + v; });
}

LatticeElement LatticeElement::operator-(const LatticeElement& o) const {
    return pointwise(*this, o, [](const Rational& u, const Rational& v) { return u - v; });
}

LatticeElement LatticeElement::operator-() const { return scaled(Rational(-1)); }

LatticeElement LatticeElement::scaled(const Rational& c) const {
    std::vector<Rational> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(v * c);
    if (is_finite()) return finite(std::move(out));
    return ec(std::move(out), tail_ * c);
}

LatticeElement LatticeElement::abs() const {
    std::vector<Rational> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(v.abs());
    if (is_finite()) return finite(std::move(out));
    return ec(std::move(out), tail_.abs());
}

LatticeElement LatticeElement::min_with(const LatticeElement& o) const {
    return pointwise(*this, o, [](const Rational& u, const Rational& v) { return min(u, v); });
}

LatticeElement LatticeElement::max_with(const LatticeElement& o) const {
    return pointwise(*this, o, [](const Rational& u, const Rational& v) { return max(u, v); });
}

bool LatticeElement::leq(const LatticeElement& o) const {
    if (!same_model(o)) throw std::invalid_argument("lattice model mismatch");
    std::size_t len = std::max(data_.size(), o.data_.size());
    for (std::size_t i = 0; i < len; ++i)
        if (!(at(i) <= o.at(i))) return false;
    return is_finite() || tail_ <= o.tail_;
}

bool LatticeElement::operator==(const LatticeElement& o) const {
    return kind_ == o.kind_ && data_ == o.data_ && (is_finite() || tail_ == o.tail_);
}

bool LatticeElement::operator<(const LatticeElement& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (data_.size() != o.data_.size()) return data_.size() < o.data_.size();
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (data_[i] != o.data_[i]) return data_[i] < o.data_[i];
    }
    return is_ec() && tail_ < o.tail_;
}

std::string LatticeElement::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i) os << ' ';
        os << data_[i];
    }
    if (is_ec()) {
        if (!data_.empty()) os << ' ';
        os << "; tail " << tail_;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeElement& x) { return os << x.str(); }

// --- OrderProjection ---------------------------------------------------------

OrderProjection::OrderProjection(std::size_t m, std::uint64_t bits) : m_(m), bits_(bits) {
    if (m > 63) throw std::invalid_argument("OrderProjection: dimension too large");
    if (m < 64 && (bits >> m) != 0) throw std::invalid_argument("OrderProjection: mask exceeds dimension");
}

OrderProjection OrderProjection::full(std::size_t m) {
    return OrderProjection(m, m == 0 ? 0 : ((std::uint64_t{1} << m) - 1));
}

OrderProjection OrderProjection::none(std::size_t m) { return OrderProjection(m, 0); }

OrderProjection OrderProjection::of_coords(std::size_t m, const std::vector<std::size_t>& coords1based) {
    std::uint64_t bits = 0;
    for (std::size_t c : coords1based) {
        if (c < 1 || c > m) throw std::invalid_argument("OrderProjection: coordinate out of range");
        bits |= std::uint64_t{1} << (c - 1);
    }
    return OrderProjection(m, bits);
}

OrderProjection OrderProjection::complement() const {
    return OrderProjection(m_, ~bits_ & ((std::uint64_t{1} << m_) - 1));
}

LatticeElement OrderProjection::apply(const LatticeElement& x) const {
    if (!x.is_finite() || x.dim() != m_)
        throw std::invalid_argument("OrderProjection::apply: element not in R^m");
    std::vector<Rational> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) out.push_back(contains(i) ? x.coords()[i] : Rational(0));
    return LatticeElement::finite(std::move(out));
}

std::string OrderProjection::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < m_; ++i) {
        if (!contains(i)) continue;
        if (!first) os << ',';
        os << (i + 1);
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<OrderProjection> all_order_projections(std::size_t m) {
    std::vector<OrderProjection> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) out.emplace_back(m, bits);
    return out;
}

// --- PartitionOfUnity --------------------------------------------------------

PartitionOfUnity::PartitionOfUnity(std::vector<OrderProjection> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("PartitionOfUnity: no blocks");
    std::uint64_t seen = 0;
    for (const auto& b : blocks_) {
        if (b.space_dim() != blocks_.front().space_dim())
            throw std::invalid_argument("PartitionOfUnity: mixed dimensions");
        if (b.empty()) throw std::invalid_argument("PartitionOfUnity: empty block");
        if (seen & b.bits()) throw std::invalid_argument("PartitionOfUnity: overlapping blocks");
        seen |= b.bits();
    }
    if (seen != OrderProjection::full(blocks_.front().space_dim()).bits())
        throw std::invalid_argument("PartitionOfUnity: blocks do not cover the space");
}

std::string PartitionOfUnity::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ' ';
        os << blocks_[i].str();
    }
    return os.str();
}

namespace {

// Restricted growth strings a[0..m-1]: a[0]=0, a[i] <= max(a[0..i-1]) + 1.
bool enumerate_rgs(std::size_t m, std::size_t exact_blocks,
                   const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> a(m, 0);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) -> bool {
        if (i == m) {
            if (used != exact_blocks) return true;
            return visit(a);
        }
        for (std::size_t v = 0; v <= used && v < exact_blocks; ++v) {
            a[i] = v;
            std::size_t next_used = std::max(used, v + 1);
            if (next_used + (m - i - 1) < exact_blocks) continue;  // cannot reach the block count
            if (!rec(i + 1, next_used)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

void for_each_partition_of_unity(std::size_t m, std::size_t max_blocks,
                                 const std::function<bool(const PartitionOfUnity&)>& visit) {
    if (m < 1) throw std::invalid_argument("partitions_of_unity: m must be >= 1");
    max_blocks = std::min(max_blocks, m);
    for (std::size_t k = 1; k <= max_blocks; ++k) {
        bool keep_going = enumerate_rgs(m, k, [&](const std::vector<std::size_t>& a) {
            std::vector<std::uint64_t> bits(k, 0);
            for (std::size_t i = 0; i < m; ++i) bits[a[i]] |= std::uint64_t{1} << i;
            std::vector<OrderProjection> blocks;
            blocks.reserve(k);
            for (std::uint64_t b : bits) blocks.emplace_back(m, b);
            return visit(PartitionOfUnity(std::move(blocks)));
        });
        if (!keep_going) return;
    }
}

std::vector<PartitionOfUnity> partitions_of_unity(std::size_t m, std::size_t max_blocks) {
    std::vector<PartitionOfUnity> out;
    for_each_partition_of_unity(m, max_blocks, [&](const PartitionOfUnity& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

// --- FragmentChain -----------------------------------------------------------

FragmentChain::FragmentChain(std::vector<LatticeElement> steps, LatticeElement target)
    : steps_(std::move(steps)), target_(std::move(target)) {
    if (steps_.empty()) throw std::invalid_argument("FragmentChain: no steps");
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (!is_fragment(steps_[k], target_))
            throw std::invalid_argument("FragmentChain: step is not a fragment of the target");
        if (k + 1 < steps_.size() && !is_fragment(steps_[k], steps_[k + 1]))
            throw std::invalid_argument("FragmentChain: steps are not increasing fragments");
    }
}

bool FragmentChain::converges_at(std::size_t resolution) const {
    LatticeElement residual = target_ - steps_.back();
    if (residual.is_finite()) return residual.is_zero();
    for (std::size_t i = 0; i < std::min(residual.prefix().size(), resolution); ++i)
        if (!residual.prefix()[i].is_zero()) return false;
    return true;
}

FragmentChain canonical_chain(const LatticeElement& e, std::size_t resolution) {
    if (e.is_finite()) return FragmentChain({e}, e);
    if (resolution < e.prefix().size())
        throw std::invalid_argument("canonical_chain: resolution below prefix length");
    std::vector<LatticeElement> steps;
    for (std::size_t k = 1; k <= std::max<std::size_t>(resolution, 1); ++k) {
        std::vector<Rational> pre;
        for (std::size_t i = 0; i < k; ++i) pre.push_back(e.at(i));
        steps.push_back(LatticeElement::ec(std::move(pre), Rational(0)));
    }
    return FragmentChain(std::move(steps), e);
}

// --- fragment calculus -------------------------------------------------------

bool disjoint(const LatticeElement& x, const LatticeElement& y) {
    if (!x.same_model(y)) throw std::invalid_argument("disjoint: lattice model mismatch");
    std::size_t len = std::max(x.explicit_size(), y.explicit_size());
    for (std::size_t i = 0; i < len; ++i)
        if (!x.at(i).is_zero() && !y.at(i).is_zero()) return false;
    if (x.is_ec() && !x.tail().is_zero() && !y.tail().is_zero()) return false;
    return true;
}

bool is_fragment(const LatticeElement& z, const LatticeElement& x) { return disjoint(z, x - z); }

std::vector<LatticeElement> fragments(const LatticeElement& x, std::size_t resolution) {
    std::set<LatticeElement> out;
    if (x.is_finite()) {
        std::size_t n = x.dim();
        if (n > 20) throw std::invalid_argument("fragments: dimension too large to enumerate");
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            std::vector<Rational> coords;
            coords.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                coords.push_back((bits >> i) & 1u ? x.coords()[i] : Rational(0));
            out.insert(LatticeElement::finite(std::move(coords)));
        }
    } else {
        if (resolution < x.prefix().size())
            throw std::invalid_argument("fragments: resolution below prefix length");
        if (resolution > 20) throw std::invalid_argument("fragments: resolution too large to enumerate");
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (resolution + 1)); ++bits) {
            std::vector<Rational> pre;
            pre.reserve(resolution);
            for (std::size_t i = 0; i < resolution; ++i)
                pre.push_back((bits >> i) & 1u ? x.at(i) : Rational(0));
            Rational t = (bits >> resolution) & 1u ? x.tail() : Rational(0);
            out.insert(LatticeElement::ec(std::move(pre), std::move(t)));
        }
    }
    return std::vector<LatticeElement>(out.begin(), out.end());
}

std::vector<std::pair<LatticeElement, LatticeElement>> disjoint_partitions(const LatticeElement& f,
                                                                           std::size_t resolution) {
    std::vector<std::pair<LatticeElement, LatticeElement>> out;
    for (const auto& g : fragments(f, resolution)) out.emplace_back(g, f - g);
    return out;
}

std::pair<LatticeElement, LatticeElement> fragment_split(const LatticeElement& z, const LatticeElement& x,
                                                         const LatticeElement& y) {
    if (!disjoint(x, y)) throw std::invalid_argument("fragment_split: x and y are not disjoint");
    if (!is_fragment(z, x + y)) throw std::invalid_argument("fragment_split: z is not a fragment of x + y");
    std::size_t len = std::max(z.explicit_size(), x.explicit_size());
    std::vector<Rational> first;
    first.reserve(len);
    for (std::size_t i = 0; i < len; ++i) first.push_back(x.at(i).is_zero() ? Rational(0) : z.at(i));
    LatticeElement z1 = z.is_finite()
                            ? LatticeElement::finite(std::move(first))
                            : LatticeElement::ec(std::move(first), x.tail().is_zero() ? Rational(0) : z.tail());
    return {z1, z - z1};
}

OrderProjection element_band_projection(const LatticeElement& g) {
    if (!g.is_finite()) throw std::invalid_argument("element_band_projection: element not in R^m");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!g.coords()[i].is_zero()) bits |= std::uint64_t{1} << i;
    return OrderProjection(g.dim(), bits);
}

}  // namespace uryson
