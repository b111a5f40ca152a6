#include "uryson/lateral.hpp"

#include "uryson/calculus.hpp"
#include "uryson/sampling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uryson {

namespace {

void require_positive(const UrysonOperator& op, const char* who) {
    if (!op.is_positive()) throw std::invalid_argument(std::string(who) + ": operator must be positive");
}

using Interval = PiecewiseLinearFn::ZeroInterval;

std::vector<Interval> intersect_interval_lists(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Interval z;
            z.lo = x.lo;
            if (y.lo && (!z.lo || *y.lo > *z.lo)) z.lo = y.lo;
            z.hi = x.hi;
            if (y.hi && (!z.hi || *y.hi < *z.hi)) z.hi = y.hi;
            if (z.lo && z.hi && *z.lo > *z.hi) continue;
            out.push_back(std::move(z));
        }
    }
    return out;
}

std::vector<Rational> interval_representatives(const Interval& z) {
    std::set<Rational> reps;
    if (!z.lo && !z.hi) {
        reps = {Rational(0), Rational(-1), Rational(1)};
    } else if (!z.lo) {
        reps = {*z.hi, *z.hi - Rational(1)};
    } else if (!z.hi) {
        reps = {*z.lo, *z.lo + Rational(1)};
    } else {
        reps = {*z.lo, *z.hi, (*z.lo + *z.hi) / Rational(2)};
    }
    return std::vector<Rational>(reps.begin(), reps.end());
}

/// Per-column zero points common to all output rows (plus the tail column).
std::vector<std::vector<Rational>> column_zero_points(const UrysonOperator& T) {
    std::size_t cols = T.domain().columns + (T.domain().is_finite() ? 0 : 1);
    std::vector<std::vector<Rational>> points;
    points.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        bool tail_col = j == T.domain().columns;
        std::vector<Interval> common{{std::nullopt, std::nullopt}};
        for (std::size_t i = 0; i < T.codomain(); ++i) {
            const PiecewiseLinearFn& entry =
                tail_col ? (T.tail_column() ? (*T.tail_column())[i] : PiecewiseLinearFn::zero())
                         : T.kernel()[i][j];
            common = intersect_interval_lists(common, entry.zero_intervals());
        }
        std::set<Rational> reps;
        for (const auto& z : common)
            for (auto& r : interval_representatives(z)) reps.insert(r);
        reps.insert(Rational(0));  // 0 is always a common zero (entries vanish at 0)
        points.emplace_back(reps.begin(), reps.end());
    }
    return points;
}

}  // namespace

AdmissibleSet::AdmissibleSet(std::string name, DomainDesc domain, Predicate contains, Sampler samples,
                             bool laterally_dense, std::string density_note)
    : name_(std::move(name)), domain_(domain), contains_(std::move(contains)), samples_(std::move(samples)),
      laterally_dense_(laterally_dense), density_note_(std::move(density_note)) {}

AdmissibleSet AdmissibleSet::whole_space(const DomainDesc& domain) {
    return AdmissibleSet(
        "E", domain, [domain](const LatticeElement& x) { return domain.accepts(x); },
        [domain](std::size_t resolution) {
            Rng rng(0xE0);
            std::vector<LatticeElement> out;
            if (domain.is_finite()) {
                std::size_t n = domain.columns;
                out.push_back(LatticeElement::finite(std::vector<Rational>(n, Rational(0))));
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<Rational> v(n, Rational(0));
                    v[j] = Rational(j % 2 ? -2 : 1);
                    out.push_back(LatticeElement::finite(std::move(v)));
                }
            } else {
                out.push_back(LatticeElement::ec({}, Rational(0)));
                out.push_back(LatticeElement::ec({Rational(1)}, Rational(0)));
                out.push_back(LatticeElement::ec({Rational(0), Rational(-2)}, Rational(0)));
                out.push_back(LatticeElement::ec({}, Rational(1)));
            }
            for (int k = 0; k < 8; ++k) out.push_back(random_element(rng, domain, resolution));
            return out;
        },
        true, "every element is the limit of the constant chain at itself");
}

AdmissibleSet AdmissibleSet::support_ideal(const DomainDesc& domain, std::vector<std::size_t> coords1based) {
    std::set<std::size_t> mask(coords1based.begin(), coords1based.end());
    std::string name = "ideal{";
    for (auto c : mask) name += std::to_string(c) + ",";
    if (!mask.empty()) name.pop_back();
    name += "}";
    auto member = [domain, mask](const LatticeElement& x) {
        if (!domain.accepts(x)) return false;
        for (std::size_t i = 0; i < x.explicit_size(); ++i)
            if (!x.at(i).is_zero() && !mask.count(i + 1)) return false;
        return x.is_finite() || x.tail().is_zero();
    };
    return AdmissibleSet(
        name, domain, member,
        [domain, mask](std::size_t resolution) {
            Rng rng(0x1D);
            std::vector<LatticeElement> out;
            for (int k = 0; k < 12; ++k) {
                LatticeElement x = random_element(rng, domain, resolution);
                std::size_t len = x.explicit_size();
                std::vector<Rational> coords;
                for (std::size_t i = 0; i < len; ++i)
                    coords.push_back(mask.count(i + 1) ? x.at(i) : Rational(0));
                out.push_back(domain.is_finite() ? LatticeElement::finite(std::move(coords))
                                                 : LatticeElement::ec(std::move(coords), Rational(0)));
            }
            return out;
        },
        false, "");
}

AdmissibleSet AdmissibleSet::fragments_of(const LatticeElement& e, std::size_t resolution) {
    std::size_t base = std::max(resolution, e.explicit_size());
    return AdmissibleSet(
        "F_e", e.is_finite() ? DomainDesc::finite(e.dim()) : DomainDesc::ecseq(base),
        [e](const LatticeElement& x) { return x.same_model(e) && is_fragment(x, e); },
        [e, base](std::size_t res) { return fragments(e, std::max(res, base)); }, false, "");
}

AdmissibleSet AdmissibleSet::null_set(const UrysonOperator& T) {
    require_positive(T, "null_set");
    auto points = column_zero_points(T);
    const DomainDesc domain = T.domain();
    return AdmissibleSet(
        "N_T", domain, [T](const LatticeElement& x) { return T.apply(x).is_zero(); },
        [points, domain](std::size_t) {
            // Cartesian product of per-column representatives, capped.
            const std::size_t cap = 64;
            std::vector<std::vector<Rational>> members{{}};
            for (const auto& reps : points) {
                std::vector<std::vector<Rational>> next;
                for (const auto& base : members) {
                    for (const auto& r : reps) {
                        if (next.size() >= cap * 4) break;
                        auto v = base;
                        v.push_back(r);
                        next.push_back(std::move(v));
                    }
                }
                members = std::move(next);
            }
            std::vector<LatticeElement> out;
            for (const auto& v : members) {
                if (out.size() >= cap) break;
                if (domain.is_finite()) {
                    out.push_back(LatticeElement::finite(v));
                } else {
                    std::vector<Rational> pre(v.begin(), v.end() - 1);
                    out.push_back(LatticeElement::ec(std::move(pre), v.back()));
                }
            }
            return out;
        },
        false, "");
}

AdmissibleSet AdmissibleSet::c00() {
    DomainDesc domain = DomainDesc::ecseq(0);
    return AdmissibleSet(
        "c00", domain, [](const LatticeElement& x) { return x.is_ec() && x.tail().is_zero(); },
        [domain](std::size_t resolution) {
            Rng rng(0xC0);
            std::vector<LatticeElement> out;
            out.push_back(LatticeElement::ec({}, Rational(0)));
            out.push_back(LatticeElement::ec({Rational(1)}, Rational(0)));
            out.push_back(LatticeElement::ec({Rational(0), Rational(2)}, Rational(0)));
            out.push_back(LatticeElement::ec({Rational(0), Rational(0), Rational(-3)}, Rational(0)));
            out.push_back(LatticeElement::ec({Rational(5), Rational(0), Rational(1, 2)}, Rational(0)));
            for (int k = 0; k < 8; ++k) {
                LatticeElement x = random_element(rng, domain, resolution);
                out.push_back(LatticeElement::ec(std::vector<Rational>(
                                                     x.prefix().begin(), x.prefix().end()),
                                                 Rational(0)));
            }
            return out;
        },
        true, "prefix truncations form lateral chains converging to any element");
}

AdmissibilityReport check_admissible(const AdmissibleSet& D, std::size_t resolution) {
    AdmissibilityReport report;
    std::vector<LatticeElement> samples = D.samples(resolution);
    if (samples.empty()) throw std::invalid_argument("check_admissible: empty sample list");
    for (const auto& x : samples) {
        for (const auto& z : fragments(x, std::max(resolution, x.explicit_size()))) {
            ++report.fragment_checks;
            if (!D.contains(z)) {
                report.passed = false;
                std::ostringstream os;
                os << "fragment (" << z << ") of member (" << x << ") is not a member";
                report.witness = os.str();
                return report;
            }
        }
    }
    for (const auto& x : samples) {
        for (const auto& y : samples) {
            if (!disjoint(x, y)) continue;
            ++report.sum_checks;
            if (!D.contains(x + y)) {
                report.passed = false;
                std::ostringstream os;
                os << "disjoint members (" << x << ") and (" << y << ") sum to a non-member";
                report.witness = os.str();
                return report;
            }
        }
    }
    return report;
}

LatticeElement pi_D_at_fn(const OperatorFn& T, std::size_t codomain, const AdmissibleSet& D,
                          const LatticeElement& x, std::size_t resolution) {
    std::optional<LatticeElement> sup;
    for (const auto& y : fragments(x, resolution)) {
        if (!D.contains(y)) continue;
        LatticeElement v = T(y);
        sup = sup ? sup->max_with(v) : v;
    }
    if (!sup) return LatticeElement::finite(std::vector<Rational>(codomain, Rational(0)));
    return *sup;
}

LatticeElement pi_D_at(const UrysonOperator& T, const AdmissibleSet& D, const LatticeElement& x,
                       std::size_t resolution) {
    require_positive(T, "pi_D_at");
    return pi_D_at_fn(as_fn(T), T.codomain(), D, x, resolution);
}

CheckOutcome check_fragment_property(const UrysonOperator& T, const AdmissibleSet& D, std::size_t trials,
                                     std::uint64_t seed, std::size_t resolution) {
    require_positive(T, "check_fragment_property");
    Rng rng(seed);
    CheckOutcome out;
    auto pd = [&](const LatticeElement& x) { return pi_D_at(T, D, x, resolution); };
    auto rest = [&](const LatticeElement& x) { return T.apply(x) - pi_D_at(T, D, x, resolution); };
    for (std::size_t k = 0; k < trials; ++k) {
        ++out.trials;
        auto [x, y] = random_disjoint_pair(rng, T.domain(), resolution);
        if (pd(x + y) != pd(x) + pd(y)) {
            out.passed = false;
            out.witness = "pi^D not additive at x=(" + x.str() + ") y=(" + y.str() + ")";
            return out;
        }
        LatticeElement z = random_element(rng, T.domain(), resolution);
        LatticeElement v = pd(z);
        if (!LatticeElement::zero_like(v).leq(v) || !v.leq(T.apply(z))) {
            out.passed = false;
            out.witness = "0 <= pi^D T <= T fails at z=(" + z.str() + ")";
            return out;
        }
        if (k % 4 == 0) {
            LatticeElement meet = op_meet_at(pd, rest, z, resolution);
            if (!meet.is_zero()) {
                out.passed = false;
                out.witness = "meet(pi^D T, T - pi^D T) = (" + meet.str() + ") != 0 at z=(" + z.str() + ")";
                return out;
            }
        }
    }
    return out;
}

LatticeElement pi_family_at(const UrysonOperator& T, const FamilyOfAdmissible& family, const LatticeElement& e,
                            std::size_t resolution) {
    require_positive(T, "pi_family_at");
    if (family.generators.empty()) throw std::invalid_argument("pi_family_at: empty family");
    std::optional<LatticeElement> inf;
    for (const auto& D : family.generators) {
        LatticeElement v = pi_D_at(T, D, e, resolution);
        inf = inf ? inf->min_with(v) : v;
    }
    return *inf;
}

LatticeElement chain_value(const UrysonOperator& T, const FragmentChain& chain) {
    std::optional<LatticeElement> sup;
    for (const auto& step : chain.steps()) {
        LatticeElement v = T.apply(step);
        sup = sup ? sup->max_with(v) : v;
    }
    return *sup;
}

LatticeElement chain_formula_at(const UrysonOperator& T, const LatticeElement& e, std::size_t resolution) {
    return chain_value(T, canonical_chain(e, resolution));
}

LateralDecomposition continuous_part_at(const UrysonOperator& T, const LatticeElement& e,
                                        std::size_t resolution) {
    require_positive(T, "continuous_part_at");
    LatticeElement te = T.apply(e);
    if (e.is_finite()) return {te, LatticeElement::zero_like(te)};
    if (resolution < e.prefix().size())
        throw std::invalid_argument("continuous_part_at: resolution below prefix length");

    FamilyOfAdmissible catalog{{AdmissibleSet::whole_space(T.domain()), AdmissibleSet::c00()}};
    LatticeElement value = pi_family_at(T, catalog, e, resolution);
    LatticeElement value_refined = pi_family_at(T, catalog, e, resolution + 3);
    if (value != value_refined)
        throw std::logic_error("continuous_part_at: catalog value did not stabilize across resolutions");
    LatticeElement chain = chain_formula_at(T, e, resolution);
    LatticeElement chain_refined = chain_formula_at(T, e, resolution + 3);
    if (chain != chain_refined)
        throw std::logic_error("continuous_part_at: chain value did not stabilize across resolutions");
    if (value != chain)
        throw std::logic_error("continuous_part_at: catalog and chain formulas disagree");
    return {value, te - value};
}

bool is_singular(const UrysonOperator& T, const AdmissibleSet& D, std::size_t resolution) {
    if (!D.laterally_dense())
        throw std::invalid_argument("is_singular: admissible set is not marked laterally dense");
    for (const auto& y : D.samples(resolution))
        if (!T.apply(y).is_zero()) return false;
    return true;
}

CheckOutcome check_orthogonality_theorem(const UrysonOperator& kernel_op, const UrysonOperator& tail_op,
                                         const std::vector<LatticeElement>& e_samples,
                                         std::size_t resolution) {
    require_positive(kernel_op, "check_orthogonality_theorem");
    require_positive(tail_op, "check_orthogonality_theorem");
    if (!kernel_op.pure_kernel() && !(*kernel_op.tail_column() ==
                                      std::vector<PiecewiseLinearFn>(kernel_op.codomain(), PiecewiseLinearFn::zero())))
        throw std::invalid_argument("check_orthogonality_theorem: first operator must be pure kernel");
    for (const auto& row : tail_op.kernel())
        for (const auto& entry : row)
            if (!entry.is_zero())
                throw std::invalid_argument("check_orthogonality_theorem: second operator must be pure tail");

    CheckOutcome out;
    UrysonOperator sum = kernel_op + tail_op;
    for (const auto& e : e_samples) {
        ++out.trials;
        LatticeElement meet = op_meet_at(kernel_op, tail_op, e, resolution);
        if (!meet.is_zero()) {
            out.passed = false;
            out.witness = "meet(kernel, tail) = (" + meet.str() + ") != 0 at e=(" + e.str() + ")";
            return out;
        }
        LateralDecomposition d = continuous_part_at(sum, e, resolution);
        if (d.continuous_part != kernel_op.apply(e) || d.singular_part != tail_op.apply(e)) {
            out.passed = false;
            out.witness = "decomposition at e=(" + e.str() + ") gave (" + d.continuous_part.str() + " | " +
                          d.singular_part.str() + ")";
            return out;
        }
    }
    return out;
}

}  // namespace uryson
