#include "uryson/band.hpp"

#include <algorithm>
#include <stdexcept>

namespace uryson {

namespace {

void require_positive(const UrysonOperator& op, const char* who) {
    if (!op.is_positive()) throw std::invalid_argument(std::string(who) + ": operator must be positive");
}

struct Candidates {
    std::vector<LatticeElement> frags;
    std::vector<LatticeElement> t_values;  // T f, aligned with frags
    std::vector<LatticeElement> s_values;  // S f, aligned with frags
    std::vector<OrderProjection> masks;
    LatticeElement t_at_e;
    LatticeElement s_at_e;

    Candidates(const OperatorFn& T, const UrysonOperator& S, const LatticeElement& e, std::size_t resolution)
        : t_at_e(T(e)), s_at_e(S.apply(e)) {
        frags = fragments(e, resolution);
        t_values.reserve(frags.size());
        s_values.reserve(frags.size());
        for (const auto& f : frags) {
            t_values.push_back(T(f));
            s_values.push_back(S.apply(f));
        }
        masks = all_order_projections(t_at_e.dim());
    }
};

bool feasible(const OrderProjection& rho, const LatticeElement& constraint, ProjectionMode mode,
              const Rational& epsilon, const LatticeElement& s_at_e) {
    LatticeElement masked = rho.apply(constraint);
    if (mode == ProjectionMode::ExactLimit) return masked.is_zero();
    return masked.leq(s_at_e.scaled(epsilon));
}

}  // namespace

LatticeElement sigma_at_fn(const OperatorFn& T, const UrysonOperator& S, const LatticeElement& e,
                           ProjectionMode mode, const Rational& epsilon, std::size_t resolution) {
    require_positive(S, "sigma_at");
    if (mode == ProjectionMode::EpsilonGrid && !(epsilon > Rational(0)))
        throw std::invalid_argument("sigma_at: epsilon must be positive in grid mode");
    Candidates c(T, S, e, resolution);
    std::optional<LatticeElement> best;
    for (const auto& rho : c.masks) {
        for (std::size_t k = 0; k < c.frags.size(); ++k) {
            if (!feasible(rho, c.s_values[k], mode, epsilon, c.s_at_e)) continue;
            LatticeElement value = rho.apply(c.t_values[k]);
            best = best ? best->max_with(value) : value;
        }
    }
    // The zero mask is always feasible, so best is set; keep the guard anyway.
    return best ? *best : LatticeElement::zero_like(c.t_at_e);
}

LatticeElement pi_at_fn(const OperatorFn& T, const UrysonOperator& S, const LatticeElement& e,
                        ProjectionMode mode, const Rational& epsilon, std::size_t resolution) {
    require_positive(S, "pi_at");
    if (mode == ProjectionMode::EpsilonGrid && !(epsilon > Rational(0)))
        throw std::invalid_argument("pi_at: epsilon must be positive in grid mode");
    Candidates c(T, S, e, resolution);
    std::optional<LatticeElement> best;
    for (const auto& rho : c.masks) {
        OrderProjection rho_perp = rho.complement();
        LatticeElement outside = rho_perp.apply(c.t_at_e);
        for (std::size_t k = 0; k < c.frags.size(); ++k) {
            // S(e - f) = Se - Sf, since f and e - f are disjoint.
            LatticeElement s_rest = c.s_at_e - c.s_values[k];
            if (!feasible(rho, s_rest, mode, epsilon, c.s_at_e)) continue;
            LatticeElement value = rho.apply(c.t_values[k]) + outside;
            best = best ? best->min_with(value) : value;
        }
    }
    return best ? *best : c.t_at_e;
}

LatticeElement sigma_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                        ProjectionMode mode, const Rational& epsilon, std::size_t resolution) {
    require_positive(T, "sigma_at");
    return sigma_at_fn(as_fn(T), S, e, mode, epsilon, resolution);
}

LatticeElement pi_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                     ProjectionMode mode, const Rational& epsilon, std::size_t resolution) {
    require_positive(T, "pi_at");
    return pi_at_fn(as_fn(T), S, e, mode, epsilon, resolution);
}

ProjectionValue band_project(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                             ProjectionMode mode, const Rational& epsilon, std::size_t resolution) {
    LatticeElement sigma = sigma_at(T, S, e, mode, epsilon, resolution);
    LatticeElement pi = pi_at(T, S, e, mode, epsilon, resolution);
    if (pi + sigma != T.apply(e))
        throw std::logic_error("band_project: pi + sigma != Te");
    ProjectionValue out{std::move(pi), std::move(sigma), mode, std::nullopt};
    if (mode == ProjectionMode::EpsilonGrid) out.epsilon = epsilon;
    return out;
}

std::optional<Rational> grid_stabilization_threshold(const UrysonOperator& T, const UrysonOperator& S,
                                                     const LatticeElement& e, std::size_t resolution) {
    require_positive(T, "grid_stabilization_threshold");
    require_positive(S, "grid_stabilization_threshold");
    Candidates c(as_fn(T), S, e, resolution);
    std::optional<Rational> threshold;
    for (const auto& rho : c.masks) {
        for (std::size_t k = 0; k < c.frags.size(); ++k) {
            LatticeElement masked = rho.apply(c.s_values[k]);
            if (masked.is_zero()) continue;  // feasible in the exact limit
            // Smallest epsilon at which this pair becomes feasible, if any.
            std::optional<Rational> needed;
            bool reachable = true;
            for (std::size_t i = 0; i < masked.dim(); ++i) {
                const Rational& num = masked.coords()[i];
                if (num.is_zero()) continue;
                const Rational& den = c.s_at_e.coords()[i];
                if (den.is_zero()) {
                    reachable = false;
                    break;
                }
                Rational ratio = num / den;
                needed = needed ? max(*needed, ratio) : ratio;
            }
            if (!reachable || !needed) continue;
            threshold = threshold ? min(*threshold, *needed) : *needed;
        }
    }
    return threshold;
}

bool check_observation(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                       std::size_t resolution) {
    LatticeElement te = T.apply(e);
    LatticeElement sigma = sigma_at(T, S, e, ProjectionMode::ExactLimit, Rational(0), resolution);
    LatticeElement pi = pi_at(T, S, e, ProjectionMode::ExactLimit, Rational(0), resolution);
    OrderProjection rho_se = element_band_projection(S.apply(e));
    OrderProjection rho_perp = rho_se.complement();
    return rho_perp.apply(sigma) == rho_perp.apply(te) && rho_se.apply(pi) == pi;
}

IncreasingSet::IncreasingSet(std::vector<UrysonOperator> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("IncreasingSet: empty member list");
    for (const auto& m : members_) require_positive(m, "IncreasingSet");
    // Close under materialized joins until every pair has a dominating member.
    const std::size_t cap = 64;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t count = members_.size();
        for (std::size_t i = 0; i < count && !changed; ++i) {
            for (std::size_t j = i + 1; j < count && !changed; ++j) {
                bool dominated = false;
                for (const auto& q : members_)
                    if (q.dominates(members_[i]) && q.dominates(members_[j])) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                UrysonOperator join = members_[i].entrywise_max(members_[j]);
                if (std::find(members_.begin(), members_.end(), join) == members_.end()) {
                    if (members_.size() >= cap)
                        throw std::logic_error("IncreasingSet: join closure exceeded the size cap");
                    members_.push_back(std::move(join));
                }
                changed = true;
            }
        }
    }
}

LatticeElement sigma_increasing(const UrysonOperator& T, const IncreasingSet& A, const LatticeElement& e,
                                std::size_t resolution) {
    require_positive(T, "sigma_increasing");
    std::optional<LatticeElement> best;
    for (const auto& S : A.members()) {
        LatticeElement v = sigma_at(T, S, e, ProjectionMode::ExactLimit, Rational(0), resolution);
        best = best ? best->min_with(v) : v;
    }
    return *best;
}

bool certificate_valid(const DisjointnessCertificate& cert, const UrysonOperator& T, const UrysonOperator& S,
                       const LatticeElement& e) {
    LatticeElement te_eps = T.apply(e).scaled(cert.epsilon);
    LatticeElement se_eps = S.apply(e).scaled(cert.epsilon);
    const auto& blocks = cert.partition.blocks();
    if (blocks.size() != cert.block_fragments.size()) return false;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        const LatticeElement& ea = cert.block_fragments[a];
        if (!is_fragment(ea, e)) return false;
        if (!blocks[a].apply(T.apply(ea)).leq(te_eps)) return false;
        if (!blocks[a].apply(S.apply(e - ea)).leq(se_eps)) return false;
    }
    return true;
}

std::optional<DisjointnessCertificate> disjointness_certificate(const UrysonOperator& T,
                                                                const UrysonOperator& S,
                                                                const LatticeElement& e,
                                                                const Rational& epsilon,
                                                                std::size_t resolution) {
    require_positive(T, "disjointness_certificate");
    require_positive(S, "disjointness_certificate");
    if (!(epsilon > Rational(0))) throw std::invalid_argument("disjointness_certificate: epsilon must be > 0");

    LatticeElement te_eps = T.apply(e).scaled(epsilon);
    LatticeElement se_eps = S.apply(e).scaled(epsilon);

    auto support_size = [](const LatticeElement& x) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < x.explicit_size(); ++i)
            if (!x.at(i).is_zero()) ++count;
        if (x.is_ec() && !x.tail().is_zero()) ++count;
        return count;
    };
    std::vector<LatticeElement> frags = fragments(e, resolution);
    std::stable_sort(frags.begin(), frags.end(),
                     [&](const LatticeElement& a, const LatticeElement& b) {
                         return support_size(a) > support_size(b);
                     });
    std::vector<LatticeElement> t_of(frags.size(), te_eps), s_rest(frags.size(), se_eps);
    LatticeElement se = S.apply(e);
    for (std::size_t k = 0; k < frags.size(); ++k) {
        t_of[k] = T.apply(frags[k]);
        s_rest[k] = S.apply(e - frags[k]);
    }

    std::optional<DisjointnessCertificate> found;
    std::size_t m = T.codomain();
    for_each_partition_of_unity(m, m, [&](const PartitionOfUnity& part) {
        std::vector<LatticeElement> picks;
        for (const auto& rho : part.blocks()) {
            bool ok = false;
            for (std::size_t k = 0; k < frags.size(); ++k) {
                if (rho.apply(t_of[k]).leq(te_eps) && rho.apply(s_rest[k]).leq(se_eps)) {
                    picks.push_back(frags[k]);
                    ok = true;
                    break;
                }
            }
            if (!ok) return true;  // this partition fails; try the next one
        }
        found = DisjointnessCertificate{part, std::move(picks), epsilon};
        return false;
    });
    return found;
}

LatticeElement sigma_onedim(const UrysonOperator& T, const UrysonOperator& phi, const LatticeElement& u,
                            const LatticeElement& e, std::size_t resolution) {
    require_positive(T, "sigma_onedim");
    require_positive(phi, "sigma_onedim (phi)");
    if (phi.codomain() != 1) throw std::invalid_argument("sigma_onedim: phi must be scalar-valued");
    if (!u.is_finite() || !LatticeElement::zero_like(u).leq(u))
        throw std::invalid_argument("sigma_onedim: u must be a positive element of R^m");
    OrderProjection rho_u = element_band_projection(u);
    LatticeElement acc = rho_u.complement().apply(T.apply(e));
    std::optional<LatticeElement> sup;
    for (const auto& f : fragments(e, resolution)) {
        if (!phi.apply(f).coords()[0].is_zero()) continue;
        LatticeElement v = rho_u.apply(T.apply(f));
        sup = sup ? sup->max_with(v) : v;
    }
    if (sup) acc = acc + *sup;  // f = 0 always qualifies, so sup is set
    return acc;
}

LatticeElement pi_onedim(const UrysonOperator& T, const UrysonOperator& phi, const LatticeElement& u,
                         const LatticeElement& e, std::size_t resolution) {
    return T.apply(e) - sigma_onedim(T, phi, u, e, resolution);
}

LatticeElement pi_onedim_band(const UrysonOperator& T, const std::vector<OneDimensionalOperator>& family,
                              const LatticeElement& e, std::size_t resolution) {
    if (family.empty()) throw std::invalid_argument("pi_onedim_band: empty family");
    std::vector<UrysonOperator> members;
    members.reserve(family.size());
    for (const auto& s : family) {
        if (!LatticeElement::zero_like(s.u).leq(s.u))
            throw std::invalid_argument("pi_onedim_band: u must be positive");
        members.push_back(s.materialize());
    }
    IncreasingSet closure(std::move(members));
    return T.apply(e) - sigma_increasing(T, closure, e, resolution);
}

}  // namespace uryson
