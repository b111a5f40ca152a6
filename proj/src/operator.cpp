#include "uryson/operator.hpp"

#include "uryson/sampling.hpp"

#include <sstream>

namespace uryson {

std::string DomainDesc::str() const {
    std::ostringstream os;
    os << (is_finite() ? "finite:" : "ecseq:") << columns;
    return os.str();
}

UrysonOperator::UrysonOperator(DomainDesc domain, std::size_t codomain,
                               std::vector<std::vector<PiecewiseLinearFn>> kernel,
                               std::optional<std::vector<PiecewiseLinearFn>> tail_column)
    : domain_(domain), codomain_(codomain), kernel_(std::move(kernel)), tail_column_(std::move(tail_column)) {
    if (codomain_ == 0) throw std::invalid_argument("UrysonOperator: empty codomain");
    if (kernel_.size() != codomain_) throw std::invalid_argument("UrysonOperator: kernel row count != codomain");
    for (std::size_t i = 0; i < kernel_.size(); ++i) {
        if (kernel_[i].size() != domain_.columns)
            throw std::invalid_argument("UrysonOperator: kernel column count mismatch");
        for (std::size_t j = 0; j < kernel_[i].size(); ++j)
            if (!kernel_[i][j](Rational(0)).is_zero())
                throw std::invalid_argument("UrysonOperator: kernel entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") does not vanish at 0");
    }
    if (tail_column_) {
        if (domain_.is_finite())
            throw std::invalid_argument("UrysonOperator: tail column requires a sequence domain");
        if (tail_column_->size() != codomain_)
            throw std::invalid_argument("UrysonOperator: tail column size != codomain");
        for (std::size_t i = 0; i < tail_column_->size(); ++i)
            if (!(*tail_column_)[i](Rational(0)).is_zero())
                throw std::invalid_argument("UrysonOperator: tail entry (" + std::to_string(i + 1) +
                                            ") does not vanish at 0");
    }
}

UrysonOperator UrysonOperator::zero(DomainDesc domain, std::size_t codomain) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel(
        codomain, std::vector<PiecewiseLinearFn>(domain.columns, PiecewiseLinearFn::zero()));
    return UrysonOperator(domain, codomain, std::move(kernel));
}

LatticeElement UrysonOperator::apply(const LatticeElement& x) const {
    if (!domain_.accepts(x))
        throw std::invalid_argument("UrysonOperator::apply: element does not match domain " + domain_.str());
    std::vector<Rational> out;
    out.reserve(codomain_);
    for (std::size_t i = 0; i < codomain_; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < domain_.columns; ++j) acc += kernel_[i][j](x.at(j));
        if (tail_column_) acc += (*tail_column_)[i](x.tail());
        out.push_back(std::move(acc));
    }
    return LatticeElement::finite(std::move(out));
}

bool UrysonOperator::is_positive() const {
    for (const auto& row : kernel_)
        for (const auto& entry : row)
            if (!entry.is_nonnegative()) return false;
    if (tail_column_)
        for (const auto& entry : *tail_column_)
            if (!entry.is_nonnegative()) return false;
    return true;
}

std::optional<LatticeElement> UrysonOperator::negativity_witness() const {
    for (std::size_t i = 0; i < codomain_; ++i) {
        for (std::size_t j = 0; j < domain_.columns; ++j) {
            auto t = kernel_[i][j].negative_point();
            if (!t) continue;
            if (domain_.is_finite()) {
                std::vector<Rational> coords(domain_.columns, Rational(0));
                coords[j] = *t;
                return LatticeElement::finite(std::move(coords));
            }
            std::vector<Rational> pre(j + 1, Rational(0));
            pre[j] = *t;
            return LatticeElement::ec(std::move(pre), Rational(0));
        }
        if (tail_column_) {
            auto t = (*tail_column_)[i].negative_point();
            if (t) {
                // Zero out the kernel columns so only the tail entry fires.
                std::vector<Rational> pre(domain_.columns, Rational(0));
                return LatticeElement::ec(std::move(pre), *t);
            }
        }
    }
    return std::nullopt;
}

std::pair<UrysonOperator, UrysonOperator> UrysonOperator::aligned(const UrysonOperator& a,
                                                                  const UrysonOperator& b) {
    if (a.domain_.kind != b.domain_.kind || a.codomain_ != b.codomain_)
        throw std::invalid_argument("operator shapes do not match");
    if (a.domain_.is_finite()) {
        if (a.domain_.columns != b.domain_.columns)
            throw std::invalid_argument("operator shapes do not match");
        return {a, b};
    }
    std::size_t cols = std::max(a.domain_.columns, b.domain_.columns);
    bool tails = a.tail_column_.has_value() || b.tail_column_.has_value();
    auto widen = [&](const UrysonOperator& op) {
        auto kernel = op.kernel_;
        for (auto& row : kernel) row.resize(cols, PiecewiseLinearFn::zero());
        auto tail = op.tail_column_;
        if (tails && !tail) tail = std::vector<PiecewiseLinearFn>(op.codomain_, PiecewiseLinearFn::zero());
        return UrysonOperator(DomainDesc::ecseq(cols), op.codomain_, std::move(kernel), std::move(tail));
    };
    return {widen(a), widen(b)};
}

namespace {

UrysonOperator combine(const UrysonOperator& a, const UrysonOperator& b,
                       const std::function<PiecewiseLinearFn(const PiecewiseLinearFn&, const PiecewiseLinearFn&)>& f) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    kernel.reserve(a.codomain());
    for (std::size_t i = 0; i < a.codomain(); ++i) {
        std::vector<PiecewiseLinearFn> row;
        row.reserve(a.domain().columns);
        for (std::size_t j = 0; j < a.domain().columns; ++j) row.push_back(f(a.kernel()[i][j], b.kernel()[i][j]));
        kernel.push_back(std::move(row));
    }
    std::optional<std::vector<PiecewiseLinearFn>> tail;
    if (a.tail_column()) {
        std::vector<PiecewiseLinearFn> col;
        col.reserve(a.codomain());
        for (std::size_t i = 0; i < a.codomain(); ++i) col.push_back(f((*a.tail_column())[i], (*b.tail_column())[i]));
        tail = std::move(col);
    }
    return UrysonOperator(a.domain(), a.codomain(), std::move(kernel), std::move(tail));
}

}  // namespace

UrysonOperator UrysonOperator::map_entries(
    const std::function<PiecewiseLinearFn(const PiecewiseLinearFn&)>& f) const {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    kernel.reserve(codomain_);
    for (const auto& row : kernel_) {
        std::vector<PiecewiseLinearFn> out;
        out.reserve(row.size());
        for (const auto& entry : row) out.push_back(f(entry));
        kernel.push_back(std::move(out));
    }
    std::optional<std::vector<PiecewiseLinearFn>> tail;
    if (tail_column_) {
        std::vector<PiecewiseLinearFn> col;
        col.reserve(tail_column_->size());
        for (const auto& entry : *tail_column_) col.push_back(f(entry));
        tail = std::move(col);
    }
    return UrysonOperator(domain_, codomain_, std::move(kernel), std::move(tail));
}

UrysonOperator UrysonOperator::operator+(const UrysonOperator& o) const {
    auto [a, b] = aligned(*this, o);
    return combine(a, b, [](const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) { return f + g; });
}

UrysonOperator UrysonOperator::operator-(const UrysonOperator& o) const {
    auto [a, b] = aligned(*this, o);
    return combine(a, b, [](const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) { return f - g; });
}

UrysonOperator UrysonOperator::scaled(const Rational& c) const {
    return map_entries([&](const PiecewiseLinearFn& f) { return f.scaled(c); });
}

UrysonOperator UrysonOperator::entrywise_max(const UrysonOperator& o) const {
    auto [a, b] = aligned(*this, o);
    return combine(a, b, [](const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) { return f.max_with(g); });
}

UrysonOperator UrysonOperator::entrywise_min(const UrysonOperator& o) const {
    auto [a, b] = aligned(*this, o);
    return combine(a, b, [](const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) { return f.min_with(g); });
}

UrysonOperator UrysonOperator::entrywise_positive_part() const {
    return map_entries([](const PiecewiseLinearFn& f) { return f.positive_part(); });
}

UrysonOperator UrysonOperator::entrywise_negative_part() const {
    return map_entries([](const PiecewiseLinearFn& f) { return f.negative_part(); });
}

UrysonOperator UrysonOperator::entrywise_absolute() const {
    return map_entries([](const PiecewiseLinearFn& f) { return f.absolute_value(); });
}

UrysonOperator UrysonOperator::kernel_part() const {
    return UrysonOperator(domain_, codomain_, kernel_);
}

UrysonOperator UrysonOperator::tail_part() const {
    if (domain_.is_finite()) throw std::invalid_argument("tail_part: finite domain has no tail");
    std::vector<std::vector<PiecewiseLinearFn>> kernel(
        codomain_, std::vector<PiecewiseLinearFn>(domain_.columns, PiecewiseLinearFn::zero()));
    auto tail = tail_column_;
    if (!tail) tail = std::vector<PiecewiseLinearFn>(codomain_, PiecewiseLinearFn::zero());
    return UrysonOperator(domain_, codomain_, std::move(kernel), std::move(tail));
}

bool UrysonOperator::dominates(const UrysonOperator& o) const { return (*this - o).is_positive(); }

bool UrysonOperator::operator==(const UrysonOperator& o) const {
    if (domain_.kind != o.domain_.kind || codomain_ != o.codomain_) return false;
    auto [a, b] = aligned(*this, o);
    return a.kernel_ == b.kernel_ && a.tail_column_ == b.tail_column_;
}

std::pair<LatticeElement, LatticeElement> UrysonOperator::image_box(const LatticeElement& bound) const {
    if (!domain_.accepts(bound)) throw std::invalid_argument("image_box: bound does not match domain");
    if (!LatticeElement::zero_like(bound).leq(bound))
        throw std::invalid_argument("image_box: bound must be positive");
    std::vector<Rational> lo, hi;
    for (std::size_t i = 0; i < codomain_; ++i) {
        Rational lo_i(0), hi_i(0);
        for (std::size_t j = 0; j < domain_.columns; ++j) {
            auto [mn, mx] = kernel_[i][j].range_on(-bound.at(j), bound.at(j));
            lo_i += mn;
            hi_i += mx;
        }
        if (tail_column_) {
            auto [mn, mx] = (*tail_column_)[i].range_on(-bound.tail(), bound.tail());
            lo_i += mn;
            hi_i += mx;
        }
        lo.push_back(std::move(lo_i));
        hi.push_back(std::move(hi_i));
    }
    return {LatticeElement::finite(std::move(lo)), LatticeElement::finite(std::move(hi))};
}

std::string UrysonOperator::str() const {
    std::ostringstream os;
    os << "uryson[" << domain_.str() << " -> R^" << codomain_ << "]";
    return os.str();
}

OneDimensionalOperator::OneDimensionalOperator(UrysonOperator phi_, LatticeElement u_)
    : phi(std::move(phi_)), u(std::move(u_)) {
    if (phi.codomain() != 1) throw std::invalid_argument("OneDimensionalOperator: phi must be scalar-valued");
    if (!u.is_finite()) throw std::invalid_argument("OneDimensionalOperator: u must lie in R^m");
}

UrysonOperator OneDimensionalOperator::materialize() const { return one_dimensional(phi, u); }

UrysonOperator one_dimensional(const UrysonOperator& phi, const LatticeElement& u) {
    if (phi.codomain() != 1) throw std::invalid_argument("one_dimensional: phi must be scalar-valued");
    if (!u.is_finite()) throw std::invalid_argument("one_dimensional: u must lie in R^m");
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    kernel.reserve(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        std::vector<PiecewiseLinearFn> row;
        row.reserve(phi.domain().columns);
        for (std::size_t j = 0; j < phi.domain().columns; ++j)
            row.push_back(phi.kernel()[0][j].scaled(u.coords()[i]));
        kernel.push_back(std::move(row));
    }
    std::optional<std::vector<PiecewiseLinearFn>> tail;
    if (phi.tail_column()) {
        std::vector<PiecewiseLinearFn> col;
        col.reserve(u.dim());
        for (std::size_t i = 0; i < u.dim(); ++i) col.push_back((*phi.tail_column())[0].scaled(u.coords()[i]));
        tail = std::move(col);
    }
    return UrysonOperator(phi.domain(), u.dim(), std::move(kernel), std::move(tail));
}

UrysonOperator from_integral_kernel(const std::vector<std::vector<PiecewiseLinearFn>>& kernel_table,
                                    const std::vector<Rational>& mu) {
    if (kernel_table.empty()) throw std::invalid_argument("from_integral_kernel: empty kernel table");
    std::size_t m = kernel_table.size();
    std::size_t n = kernel_table.front().size();
    if (mu.size() != n) throw std::invalid_argument("from_integral_kernel: weight count != column count");
    for (std::size_t j = 0; j < n; ++j)
        if (!(mu[j] > Rational(0)))
            throw std::invalid_argument("from_integral_kernel: nonpositive weight mu(" + std::to_string(j + 1) +
                                        ")");
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    kernel.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (kernel_table[i].size() != n) throw std::invalid_argument("from_integral_kernel: ragged kernel table");
        std::vector<PiecewiseLinearFn> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!kernel_table[i][j](Rational(0)).is_zero())
                throw std::invalid_argument("from_integral_kernel: kernel entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") violates K(s,t,0)=0");
            row.push_back(kernel_table[i][j].scaled(mu[j]));
        }
        kernel.push_back(std::move(row));
    }
    return UrysonOperator(DomainDesc::finite(n), m, std::move(kernel));
}

OperatorFn as_fn(const UrysonOperator& op) {
    return [op](const LatticeElement& x) { return op.apply(x); };
}

CheckOutcome check_orthogonal_additivity(const OperatorFn& op, const DomainDesc& domain, std::size_t trials,
                                         std::uint64_t seed, std::size_t resolution) {
    Rng rng(seed);
    CheckOutcome out;
    out.trials = trials;
    for (std::size_t k = 0; k < trials; ++k) {
        auto [x, y] = random_disjoint_pair(rng, domain, resolution);
        LatticeElement lhs = op(x + y);
        LatticeElement rhs = op(x) + op(y);
        if (lhs != rhs) {
            out.passed = false;
            std::ostringstream os;
            os << "x=(" << x << ") y=(" << y << ") T(x+y)=(" << lhs << ") Tx+Ty=(" << rhs << ")";
            out.witness = os.str();
            return out;
        }
    }
    return out;
}

CheckOutcome check_orthogonal_additivity(const UrysonOperator& op, std::size_t trials, std::uint64_t seed,
                                         std::size_t resolution) {
    return check_orthogonal_additivity(as_fn(op), op.domain(), trials, seed, resolution);
}

}  // namespace uryson
