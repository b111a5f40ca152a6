#include "uryson/suites.hpp"

#include "uryson/band.hpp"
#include "uryson/calculus.hpp"
#include "uryson/lateral.hpp"
#include "uryson/sampling.hpp"

#include <algorithm>
#include <sstream>

namespace uryson {

namespace {

std::uint64_t sub_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

struct Ctx {
    const Scenario& scenario;
    std::size_t trials;
    std::size_t resolution;
    std::size_t max_dim;
    bool corrupt;
};

std::string digest_of(const std::string& s) { return fnv1a_digest(s); }

/// Aggregates one record over many trials: passes unless a witness appeared.
class Aggregate {
public:
    Aggregate(std::string check, std::string anchor) : check_(std::move(check)), anchor_(std::move(anchor)) {}

    void fail(const std::string& expected, const std::string& actual, const std::string& witness) {
        if (!passed_) return;
        passed_ = false;
        expected_ = expected;
        actual_ = actual;
        witness_ = witness;
    }
    template <typename A, typename B>
    void expect_eq(const A& expected, const B& actual, const std::string& witness) {
        if (!(expected == actual)) fail(expected.str(), actual.str(), witness);
    }
    void expect(bool ok, const std::string& witness) {
        if (!ok) fail("true", "false", witness);
    }
    bool ok() const { return passed_; }

    void emit(Report& report, const std::string& digest) const {
        if (passed_)
            report.add_pass(check_, anchor_, digest);
        else
            report.add_fail(check_, anchor_, digest, expected_, actual_, witness_);
    }

private:
    std::string check_, anchor_;
    bool passed_ = true;
    std::string expected_, actual_, witness_;
};

UrysonOperator identity_kernel(std::size_t n) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PiecewiseLinearFn> row(n, PiecewiseLinearFn::zero());
        row[i] = PiecewiseLinearFn::linear(Rational(1));
        kernel.push_back(std::move(row));
    }
    return UrysonOperator(DomainDesc::finite(n), n, std::move(kernel));
}

/// diag(|t|): positive, and agrees with the identity on the positive cone.
UrysonOperator absolute_kernel(std::size_t n) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PiecewiseLinearFn> row(n, PiecewiseLinearFn::zero());
        row[i] = PiecewiseLinearFn::absolute();
        kernel.push_back(std::move(row));
    }
    return UrysonOperator(DomainDesc::finite(n), n, std::move(kernel));
}

/// phi(x) = sum_j |x_j| as a scalar operator on R^n.
UrysonOperator abs_sum_phi(std::size_t n) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel{
        std::vector<PiecewiseLinearFn>(n, PiecewiseLinearFn::absolute())};
    return UrysonOperator(DomainDesc::finite(n), 1, std::move(kernel));
}

LatticeElement unit_vector(std::size_t m, std::size_t i, const Rational& value) {
    std::vector<Rational> coords(m, Rational(0));
    coords[i] = value;
    return LatticeElement::finite(std::move(coords));
}

void negative_control(Report& report, const Ctx& ctx, std::uint64_t seed) {
    // Corrupted evaluator must be caught by the additivity checker; the raw
    // (failing) outcome is recorded so downstream tooling sees the witness.
    UrysonOperator T = identity_kernel(2);
    CheckOutcome out = check_orthogonal_additivity(corrupt_with_cross_term(T), T.domain(), 64,
                                                   sub_seed(seed, "negative-control"), ctx.resolution);
    CheckRecord rec;
    rec.check = "negative-control.additivity";
    rec.anchor = "def-oa";
    rec.passed = out.passed;
    rec.inputs_digest = digest_of("corrupted identity kernel");
    rec.expected = "T(x+y) = Tx + Ty";
    rec.actual = out.passed ? "held on all samples" : "violated";
    rec.witness = out.witness;
    report.add(rec);
}

// ---- lattice-operation identities ---------------------------------------------

void suite_th1(Report& report, const Ctx& ctx, std::uint64_t seed) {
    Rng rng(sub_seed(seed, "th1"));
    for (const auto& [name, op] : ctx.scenario.operators) {
        CheckOutcome out = check_orthogonal_additivity(op, std::max<std::size_t>(ctx.trials, 32), rng.next(),
                                                       ctx.resolution);
        Aggregate agg("additivity." + name, "def-oa");
        agg.expect(out.passed, out.witness);
        agg.emit(report, digest_of(name + op.str()));
    }

    Aggregate sum("th1.join-meet-sum", "th-1.1-2");
    Aggregate decomp("th1.plus-minus-decomposition", "th-1.3-4");
    Aggregate absdom("th1.abs-dominates", "th-1.5");
    Aggregate lower("th1.join-dominates-argument", "th-1.1");
    Aggregate closed("closed-form.join-meet-agree", "th-1.1-2");
    Aggregate positivity("positivity.witness-or-cone", "def-positive");
    for (std::size_t trial = 0; trial < ctx.trials; ++trial) {
        std::size_t n = 1 + rng.index(ctx.max_dim);
        std::size_t m = 1 + rng.index(ctx.max_dim);
        UrysonOperator T = random_kernel_operator(rng, n, m, 5, false);
        UrysonOperator S = random_kernel_operator(rng, n, m, 5, false);
        UrysonOperator J = kernel_join_closed_form(T, S);
        UrysonOperator M = kernel_meet_closed_form(T, S);
        for (int k = 0; k < 5; ++k) {
            LatticeElement f = random_element(rng, T.domain());
            std::ostringstream at;
            at << "n=" << n << " m=" << m << " f=(" << f << ")";
            LatticeElement join = op_join_at(T, S, f);
            LatticeElement meet = op_meet_at(T, S, f);
            sum.expect_eq(T.apply(f) + S.apply(f), join + meet, at.str());
            decomp.expect_eq(T.apply(f), op_pos_at(T, f) - op_neg_at(T, f), at.str());
            absdom.expect(T.apply(f).abs().leq(op_abs_at(T, f)), at.str());
            lower.expect(T.apply(f).leq(join), at.str());
            closed.expect_eq(join, J.apply(f), at.str());
            closed.expect_eq(meet, M.apply(f), at.str());
        }
        if (!T.is_positive()) {
            auto witness = T.negativity_witness();
            positivity.expect(witness.has_value(), "no witness for a non-positive operator");
            if (witness) {
                LatticeElement v = T.apply(*witness);
                positivity.expect(!LatticeElement::zero_like(v).leq(v),
                                  "witness (" + witness->str() + ") gives Tx >= 0");
            }
        } else {
            LatticeElement x = random_element(rng, T.domain());
            LatticeElement v = T.apply(x);
            positivity.expect(LatticeElement::zero_like(v).leq(v), "positive operator with Tx not >= 0");
        }
    }
    std::string dig = digest_of("th1 random kernels");
    sum.emit(report, dig);
    decomp.emit(report, dig);
    absdom.emit(report, dig);
    lower.emit(report, dig);
    closed.emit(report, dig);
    positivity.emit(report, dig);

    Aggregate stability("th1.ecseq-resolution-stability", "th-1");
    for (std::size_t trial = 0; trial < std::max<std::size_t>(ctx.trials / 5, 4); ++trial) {
        std::size_t cols = 1 + rng.index(3);
        UrysonOperator T = random_ecseq_operator(rng, cols, 2, 3, false, true);
        UrysonOperator S = random_ecseq_operator(rng, cols, 2, 3, false, true);
        LatticeElement f = random_element(rng, T.domain(), cols);
        std::size_t base = std::max(cols, f.prefix().size());
        std::ostringstream at;
        at << "cols=" << cols << " f=(" << f << ")";
        stability.expect_eq(op_join_at(T, S, f, base), op_join_at(T, S, f, base + 3), at.str());
        stability.expect_eq(op_pos_at(T, f, base), op_pos_at(T, f, base + 3), at.str());
        stability.expect_eq(op_abs_at(T, f, base), op_abs_at(T, f, base + 3), at.str());
    }
    stability.emit(report, dig);
}

// ---- disjointness certificates ------------------------------------------------

void suite_disjointness(Report& report, const Ctx& ctx, std::uint64_t seed) {
    Rng rng(sub_seed(seed, "disjointness"));
    const std::vector<Rational> epsilons{Rational(1), Rational(1, 2), Rational(1, 10)};

    Aggregate exists("disjoint.certificates-exist", "disjoint");
    Aggregate meet_zero("disjoint.meet-zero", "disjoint");
    Aggregate none("disjoint.self-has-no-certificate", "disjoint");
    std::size_t pair_trials = std::max<std::size_t>(ctx.trials / 5, 8);
    for (std::size_t trial = 0; trial < pair_trials; ++trial) {
        std::size_t n = 1 + rng.index(2);
        UrysonOperator phi1 = random_kernel_operator(rng, n, 1, 3, true);
        UrysonOperator phi2 = random_kernel_operator(rng, n, 1, 3, true);
        UrysonOperator T = one_dimensional(phi1, unit_vector(2, 0, Rational(rng.int_in(1, 3))));
        UrysonOperator S = one_dimensional(phi2, unit_vector(2, 1, Rational(rng.int_in(1, 3))));
        for (int k = 0; k < 3; ++k) {
            LatticeElement e = random_element(rng, T.domain());
            std::ostringstream at;
            at << "T=phi1x(u1) S=phi2x(u2) e=(" << e << ")";
            for (const auto& eps : epsilons) {
                auto cert = disjointness_certificate(T, S, e, eps);
                exists.expect(cert.has_value(), at.str() + " eps=" + eps.str());
                if (cert)
                    exists.expect(certificate_valid(*cert, T, S, e),
                                  at.str() + " eps=" + eps.str() + " (certificate invalid)");
            }
            meet_zero.expect(op_meet_at(T, S, e).is_zero(), at.str());
        }

        // S = T != 0 with Te > 0 somewhere: no certificate below eps = 1/2.
        UrysonOperator P = random_kernel_operator(rng, n, 2, 3, true);
        auto bump = P.kernel()[0][0].max_with(PiecewiseLinearFn::absolute());
        auto kernel = P.kernel();
        kernel[0][0] = bump;
        UrysonOperator Q(P.domain(), 2, std::move(kernel));
        LatticeElement e = random_positive_element(rng, Q.domain()) +
                           unit_vector(n, 0, Rational(1)).scaled(Rational(1));
        auto cert = disjointness_certificate(Q, Q, e, Rational(1, 10));
        none.expect(!cert.has_value(), "self pair at e=(" + e.str() + ")");
    }
    std::string dig = digest_of("disjointness pairs");
    exists.emit(report, dig);
    meet_zero.emit(report, dig);
    none.emit(report, dig);

    // Both directions on unconstrained random positive pairs.
    Aggregate iff("disjoint.iff-certificates", "disjoint");
    for (std::size_t trial = 0; trial < pair_trials; ++trial) {
        std::size_t n = 1 + rng.index(2), m = 1 + rng.index(2);
        UrysonOperator T = random_kernel_operator(rng, n, m, 3, true);
        UrysonOperator S = random_kernel_operator(rng, n, m, 3, true);
        bool meets_zero = true, certs = true;
        for (int k = 0; k < 3; ++k) {
            LatticeElement e = random_element(rng, T.domain());
            if (!op_meet_at(T, S, e).is_zero()) meets_zero = false;
            for (const auto& eps : epsilons)
                if (!disjointness_certificate(T, S, e, eps).has_value()) certs = false;
        }
        std::ostringstream at;
        at << "trial " << trial << ": meet-zero=" << meets_zero << " certificates=" << certs;
        iff.expect(meets_zero == certs, at.str());
    }
    iff.emit(report, dig);
}

// ---- band projection formulas -------------------------------------------------

void suite_band(Report& report, const Ctx& ctx, std::uint64_t seed) {
    Rng rng(sub_seed(seed, "band"));
    Aggregate complement("cor2.pi-plus-sigma", "cor:2");
    Aggregate self("cor2.self-projection", "cor:2");
    Aggregate observation("cor2.observation", "cor:2-observation");
    Aggregate grid("cor2.grid-stabilizes", "cor:2");
    Aggregate szero("cor2.s-zero", "cor:2");
    Aggregate singleton("proj1.singleton", "proj-1");
    Aggregate scaling("proj1.scaling-invariance", "proj-1");
    Aggregate idem("proj1.idempotent", "proj-1");

    for (std::size_t trial = 0; trial < ctx.trials; ++trial) {
        std::size_t n = 1 + rng.index(ctx.max_dim);
        std::size_t m = 1 + rng.index(ctx.max_dim);
        UrysonOperator T = random_kernel_operator(rng, n, m, 4, true);
        UrysonOperator S = random_kernel_operator(rng, n, m, 4, true);
        LatticeElement e = random_element(rng, T.domain());
        std::ostringstream at;
        at << "n=" << n << " m=" << m << " e=(" << e << ")";

        LatticeElement te = T.apply(e);
        LatticeElement sig = sigma_at(T, S, e);
        LatticeElement pi = pi_at(T, S, e);
        complement.expect_eq(te, pi + sig, at.str());

        self.expect(sigma_at(S, S, e).is_zero(), at.str() + " sigma_S(Se)");
        self.expect_eq(S.apply(e), pi_at(S, S, e), at.str() + " pi_S(Se)");

        observation.expect(check_observation(T, S, e), at.str());

        auto threshold = grid_stabilization_threshold(T, S, e);
        Rational eps_small = pow2_inverse(20);
        if (threshold) eps_small = min(eps_small, *threshold / Rational(2));
        grid.expect_eq(sig, sigma_at(T, S, e, ProjectionMode::EpsilonGrid, eps_small), at.str());
        grid.expect_eq(pi, pi_at(T, S, e, ProjectionMode::EpsilonGrid, eps_small), at.str());
        LatticeElement prev = sigma_at(T, S, e, ProjectionMode::EpsilonGrid, Rational(1));
        for (int k = 2; k <= 8; k += 2) {
            LatticeElement cur = sigma_at(T, S, e, ProjectionMode::EpsilonGrid, pow2_inverse(k));
            grid.expect(cur.leq(prev), at.str() + " (monotone grid)");
            prev = cur;
        }
        grid.expect(sig.leq(prev), at.str() + " (grid below exact limit)");

        UrysonOperator Z = UrysonOperator::zero(T.domain(), m);
        szero.expect_eq(te, sigma_at(T, Z, e), at.str());
        szero.expect(pi_at(T, Z, e).is_zero(), at.str());

        singleton.expect_eq(sig, sigma_increasing(T, IncreasingSet({S}), e), at.str());
        scaling.expect_eq(sig, sigma_increasing(T, IncreasingSet({S, S.scaled(Rational(2))}), e), at.str());

        if (trial % 5 == 0 && n <= 3 && m <= 3) {
            OperatorFn theta = [&T, &S](const LatticeElement& x) { return sigma_at(T, S, x); };
            idem.expect_eq(sig, sigma_at_fn(theta, S, e), at.str());
        }
    }
    std::string dig = digest_of("band random triples");
    complement.emit(report, dig);
    self.emit(report, dig);
    observation.emit(report, dig);
    grid.emit(report, dig);
    szero.emit(report, dig);
    singleton.emit(report, dig);
    scaling.emit(report, dig);
    idem.emit(report, dig);
}

// ---- one-dimensional bands ----------------------------------------------------

void suite_onedim(Report& report, const Ctx& ctx, std::uint64_t seed) {
    Rng rng(sub_seed(seed, "onedim"));
    Aggregate agrees("lem6.agrees-with-generic", "lem:6");
    Aggregate complementary("lem6.complementary", "lem:6");
    Aggregate example("lem6.worked-example", "lem:6");
    Aggregate phi_zero("lem6.phi-vanishes", "lem:6");
    Aggregate cor4_single("cor4.singleton", "cor:4");
    Aggregate cor4_full("cor4.full-support", "cor:4");
    Aggregate cor4_zero("cor4.zero-family", "cor:4");

    for (std::size_t trial = 0; trial < ctx.trials; ++trial) {
        std::size_t n = 1 + rng.index(ctx.max_dim);
        std::size_t m = 1 + rng.index(ctx.max_dim);
        UrysonOperator T = random_kernel_operator(rng, n, m, 4, true);
        UrysonOperator phi = random_kernel_operator(rng, n, 1, 3, true);
        LatticeElement u = random_positive_element(rng, DomainDesc::finite(m));
        LatticeElement e = random_element(rng, T.domain());
        UrysonOperator S = one_dimensional(phi, u);
        std::ostringstream at;
        at << "n=" << n << " m=" << m << " e=(" << e << ") u=(" << u << ")";

        LatticeElement pi1 = pi_onedim(T, phi, u, e);
        agrees.expect_eq(pi_at(T, S, e), pi1, at.str());
        agrees.expect_eq(sigma_at(T, S, e), sigma_onedim(T, phi, u, e), at.str());
        complementary.expect_eq(T.apply(e), pi1 + sigma_onedim(T, phi, u, e), at.str());

        cor4_single.expect_eq(pi1, pi_onedim_band(T, {OneDimensionalOperator(phi, u)}, e), at.str());
    }

    {
        UrysonOperator T = absolute_kernel(2);
        UrysonOperator phi = abs_sum_phi(2);
        LatticeElement u = LatticeElement::finite({Rational(1), Rational(0)});
        LatticeElement e = LatticeElement::finite({Rational(1), Rational(1)});
        example.expect_eq(LatticeElement::finite({Rational(1), Rational(0)}), pi_onedim(T, phi, u, e),
                          "pi part");
        example.expect_eq(LatticeElement::finite({Rational(0), Rational(1)}), sigma_onedim(T, phi, u, e),
                          "sigma part");

        // phi(e) = 0 forces the feasible fragments to phi(f) = 0; pi vanishes.
        std::vector<std::vector<PiecewiseLinearFn>> shifted{{PiecewiseLinearFn(
            {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}, Rational(-1), Rational(1))}};
        UrysonOperator phi0(DomainDesc::finite(1), 1, std::move(shifted));  // vanishes on [0, 1]
        UrysonOperator T1 = absolute_kernel(1);
        LatticeElement e1 = LatticeElement::finite({Rational(1)});
        phi_zero.expect(phi0.apply(e1).is_zero(), "phi(e) must be 0 in this construction");
        phi_zero.expect(pi_onedim(T1, phi0, LatticeElement::finite({Rational(1)}), e1).is_zero(),
                        "pi over a vanishing phi");

        std::vector<OneDimensionalOperator> family{
            OneDimensionalOperator(abs_sum_phi(2), LatticeElement::finite({Rational(1), Rational(0)})),
            OneDimensionalOperator(abs_sum_phi(2), LatticeElement::finite({Rational(0), Rational(1)}))};
        cor4_full.expect_eq(T.apply(e), pi_onedim_band(T, family, e), "orthogonal u's spanning R^2");

        std::vector<OneDimensionalOperator> zeros{
            OneDimensionalOperator(abs_sum_phi(2), LatticeElement::finite({Rational(0), Rational(0)}))};
        cor4_zero.expect(pi_onedim_band(T, zeros, e).is_zero(), "all u = 0");
    }

    std::string dig = digest_of("onedim family");
    agrees.emit(report, dig);
    complementary.emit(report, dig);
    example.emit(report, dig);
    phi_zero.emit(report, dig);
    cor4_single.emit(report, dig);
    cor4_full.emit(report, dig);
    cor4_zero.emit(report, dig);
}

// ---- admissible sets and the lateral decomposition ----------------------------

void suite_lateral(Report& report, const Ctx& ctx, std::uint64_t seed) {
    Rng rng(sub_seed(seed, "lateral"));
    std::size_t res = ctx.resolution;

    Aggregate catalog("adm.catalog-closure", "def:adm");
    {
        UrysonOperator T = random_kernel_operator(rng, 3, 2, 3, true);
        std::vector<AdmissibleSet> sets{
            AdmissibleSet::whole_space(DomainDesc::finite(3)),
            AdmissibleSet::support_ideal(DomainDesc::finite(3), {1, 3}),
            AdmissibleSet::fragments_of(LatticeElement::finite({Rational(1), Rational(2), Rational(0)}), res),
            AdmissibleSet::null_set(T),
            AdmissibleSet::c00(),
            AdmissibleSet::whole_space(DomainDesc::ecseq(2)),
        };
        for (const auto& D : sets) {
            auto r = check_admissible(D, std::min<std::size_t>(res, 6));
            catalog.expect(r.passed, D.name() + ": " + r.witness);
        }
    }
    catalog.emit(report, digest_of("admissible catalog"));

    Aggregate negative("adm.negative-control", "def:adm");
    {
        // {x : x_1 = 1} violates closure under fragments (0 is not a member).
        AdmissibleSet bad(
            "x1=1", DomainDesc::finite(2),
            [](const LatticeElement& x) { return x.at(0) == Rational(1); },
            [](std::size_t) {
                return std::vector<LatticeElement>{LatticeElement::finite({Rational(1), Rational(2)})};
            },
            false, "");
        auto r = check_admissible(bad, 4);
        negative.expect(!r.passed, "checker accepted a non-admissible set");
        negative.expect(!r.witness.empty(), "no witness for the violation");
    }
    negative.emit(report, digest_of("admissible negative control"));

    Aggregate le01("le01.fragment-property", "le:01");
    Aggregate antitone("pi-D.antitone", "le:01");
    std::size_t le_trials = std::max<std::size_t>(ctx.trials / 5, 6);
    for (std::size_t trial = 0; trial < le_trials; ++trial) {
        std::size_t n = 2 + rng.index(2);
        UrysonOperator T = random_kernel_operator(rng, n, 2, 3, true);
        LatticeElement pivot = random_element(rng, T.domain());
        std::vector<AdmissibleSet> sets{
            AdmissibleSet::whole_space(T.domain()),
            AdmissibleSet::support_ideal(T.domain(), {1}),
            AdmissibleSet::fragments_of(pivot, res),
            AdmissibleSet::null_set(T),
        };
        for (const auto& D : sets) {
            CheckOutcome out = check_fragment_property(T, D, 24, rng.next(), res);
            le01.expect(out.passed, D.name() + ": " + out.witness);
        }
        AdmissibleSet small = AdmissibleSet::support_ideal(T.domain(), {1});
        AdmissibleSet big = AdmissibleSet::support_ideal(T.domain(), {1, 2});
        AdmissibleSet whole = AdmissibleSet::whole_space(T.domain());
        for (int k = 0; k < 4; ++k) {
            LatticeElement x = random_element(rng, T.domain());
            LatticeElement a = pi_D_at(T, small, x, res);
            LatticeElement b = pi_D_at(T, big, x, res);
            LatticeElement c = pi_D_at(T, whole, x, res);
            antitone.expect(a.leq(b) && b.leq(c), "x=(" + x.str() + ")");
        }
    }
    le01.emit(report, digest_of("le01"));
    antitone.emit(report, digest_of("le01 antitone"));

    Aggregate finite_collapse("lateral.finite-collapse", "projection");
    for (std::size_t trial = 0; trial < ctx.trials; ++trial) {
        std::size_t n = 1 + rng.index(std::min<std::size_t>(ctx.max_dim + 2, 6));
        UrysonOperator T = random_kernel_operator(rng, n, 1 + rng.index(ctx.max_dim), 4, true);
        LatticeElement e = random_element(rng, T.domain());
        LateralDecomposition d = continuous_part_at(T, e, res);
        finite_collapse.expect(d.continuous_part == T.apply(e) && d.singular_part.is_zero(),
                               "n=" + std::to_string(n) + " e=(" + e.str() + ")");
    }
    finite_collapse.emit(report, digest_of("finite collapse"));

    Aggregate split("lateral.ecseq-split", "singular");
    Aggregate formulas("lateral.formulas-agree", "projection");
    Aggregate additive("lateral.additive-in-T", "projection");
    Aggregate singular_detect("lateral.singular-detection", "singular");
    for (std::size_t trial = 0; trial < std::max<std::size_t>(ctx.trials / 2, 8); ++trial) {
        std::size_t cols = 1 + rng.index(4);
        UrysonOperator T = random_ecseq_operator(rng, cols, 2, 3, true, true);
        LatticeElement e = random_element(rng, T.domain(), std::min<std::size_t>(res, cols + 2));
        std::ostringstream at;
        at << "cols=" << cols << " e=(" << e << ")";

        UrysonOperator K = T.kernel_part();
        UrysonOperator P = T.tail_part();
        CheckOutcome out = check_orthogonality_theorem(K, P, {e}, res);
        split.expect(out.passed, at.str() + " " + out.witness);

        LateralDecomposition d = continuous_part_at(T, e, res);
        formulas.expect_eq(chain_formula_at(T, e, res), d.continuous_part, at.str());

        UrysonOperator T2 = random_ecseq_operator(rng, cols, 2, 3, true, true);
        LateralDecomposition d2 = continuous_part_at(T2, e, res);
        LateralDecomposition dsum = continuous_part_at(T + T2, e, res);
        additive.expect(dsum.continuous_part == d.continuous_part + d2.continuous_part &&
                            dsum.singular_part == d.singular_part + d2.singular_part,
                        at.str());

        AdmissibleSet c00 = AdmissibleSet::c00();
        singular_detect.expect(is_singular(P, c00, res), at.str() + " (tail part)");
        auto bumped = K.kernel();
        bumped[0][0] = bumped[0][0].max_with(PiecewiseLinearFn::absolute());
        UrysonOperator K1(K.domain(), K.codomain(), std::move(bumped), std::nullopt);
        singular_detect.expect(!is_singular(K1, c00, res), at.str() + " (kernel with |x1| entry)");
    }
    split.emit(report, digest_of("ecseq split"));
    formulas.emit(report, digest_of("ecseq formulas"));
    additive.emit(report, digest_of("ecseq additive"));
    singular_detect.emit(report, digest_of("ecseq singular"));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"th1", "disjointness", "band", "onedim", "lateral", "all"};
    return names;
}

OperatorFn corrupt_with_cross_term(const UrysonOperator& op) {
    if (op.domain().columns < 2)
        throw std::invalid_argument("corrupt_with_cross_term: need at least two columns");
    return [op](const LatticeElement& x) {
        LatticeElement base = op.apply(x);
        std::vector<Rational> coords = base.coords();
        coords[0] += x.at(0) * x.at(1);
        return LatticeElement::finite(std::move(coords));
    };
}

Report run_suite(const Scenario& scenario, const SuiteOptions& options) {
    if (std::find(suite_names().begin(), suite_names().end(), options.suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + options.suite + "'");
    Ctx ctx{scenario, options.trials ? options.trials : scenario.params.trials,
            options.resolution ? options.resolution : scenario.params.resolution, scenario.params.max_dim,
            options.inject_corruption};
    Report report(options.suite, options.seed);
    if (ctx.corrupt) negative_control(report, ctx, options.seed);
    bool all = options.suite == "all";
    if (all || options.suite == "th1") suite_th1(report, ctx, options.seed);
    if (all || options.suite == "disjointness") suite_disjointness(report, ctx, options.seed);
    if (all || options.suite == "band") suite_band(report, ctx, options.seed);
    if (all || options.suite == "onedim") suite_onedim(report, ctx, options.seed);
    if (all || options.suite == "lateral") suite_lateral(report, ctx, options.seed);
    return report;
}

}  // namespace uryson
