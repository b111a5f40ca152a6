// Acceptance suite: runs every criterion at the stated sample counts with
// exact (tolerance-zero) arithmetic and prints one pass/fail line each.
// argv[1]: path to the CLI binary (for the determinism criterion).

#include "uryson/band.hpp"
#include "uryson/calculus.hpp"
#include "uryson/lateral.hpp"
#include "uryson/sampling.hpp"
#include "uryson/scenario.hpp"
#include "uryson/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace uryson;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok || !pass) return;
        pass = false;
        detail = what;
    }
};

UrysonOperator abs_diag(std::size_t n) {
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PiecewiseLinearFn> row(n, PiecewiseLinearFn::zero());
        row[i] = PiecewiseLinearFn::absolute();
        kernel.push_back(std::move(row));
    }
    return UrysonOperator(DomainDesc::finite(n), n, std::move(kernel));
}

UrysonOperator abs_sum_phi(std::size_t n) {
    return UrysonOperator(DomainDesc::finite(n), 1,
                          {std::vector<PiecewiseLinearFn>(n, PiecewiseLinearFn::absolute())});
}

LatticeElement unit(std::size_t m, std::size_t i, long v) {
    std::vector<Rational> coords(m, Rational(0));
    coords[i] = Rational(v);
    return LatticeElement::finite(std::move(coords));
}

std::string run_command(const std::string& command, int& exit_code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return output;
    }
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

// 1. Lattice-operation identities on random kernel pairs.
Outcome criterion1() {
    Outcome out;
    Rng rng(1001);
    for (int pair = 0; pair < 200 && out.pass; ++pair) {
        std::size_t n = 1 + rng.index(4), m = 1 + rng.index(4);
        UrysonOperator T = random_kernel_operator(rng, n, m, 5, false);
        UrysonOperator S = random_kernel_operator(rng, n, m, 5, false);
        for (int k = 0; k < 20 && out.pass; ++k) {
            LatticeElement f = random_element(rng, T.domain());
            LatticeElement join = op_join_at(T, S, f);
            LatticeElement meet = op_meet_at(T, S, f);
            std::string at = "pair " + std::to_string(pair) + " f=(" + f.str() + ")";
            out.require(join + meet == T.apply(f) + S.apply(f), "(TvS)+(T^S) != T+S at " + at);
            out.require(T.apply(f) == op_pos_at(T, f) - op_neg_at(T, f), "T != T+ - T- at " + at);
            out.require(T.apply(f).abs().leq(op_abs_at(T, f)), "|Tf| > |T|(f) at " + at);
            out.require(T.apply(f).leq(join), "(TvS)(f) < Tf at " + at);
        }
    }
    return out;
}

// 2. Materialized join against the brute-force enumeration.
Outcome criterion2() {
    Outcome out;
    Rng rng(1002);
    for (int pair = 0; pair < 100 && out.pass; ++pair) {
        std::size_t n = 1 + rng.index(4), m = 1 + rng.index(4);
        UrysonOperator T = random_kernel_operator(rng, n, m, 5, false);
        UrysonOperator S = random_kernel_operator(rng, n, m, 5, false);
        UrysonOperator J = kernel_join_closed_form(T, S);
        for (int k = 0; k < 100 && out.pass; ++k) {
            LatticeElement f = random_element(rng, T.domain());
            out.require(J.apply(f) == op_join_at(T, S, f),
                        "closed form disagrees at pair " + std::to_string(pair) + " f=(" + f.str() + ")");
        }
    }
    return out;
}

// 3. Band projection complement, self-projection, observation, grid limit.
Outcome criterion3() {
    Outcome out;
    Rng rng(1003);
    Rational eps20 = pow2_inverse(20);
    for (int trial = 0; trial < 100 && out.pass; ++trial) {
        std::size_t n = 1 + rng.index(4), m = 1 + rng.index(4);
        UrysonOperator T = random_kernel_operator(rng, n, m, 4, true);
        UrysonOperator S = random_kernel_operator(rng, n, m, 4, true);
        LatticeElement e = random_element(rng, T.domain());
        std::string at = "trial " + std::to_string(trial) + " e=(" + e.str() + ")";

        LatticeElement sig = sigma_at(T, S, e);
        LatticeElement pi = pi_at(T, S, e);
        out.require(pi + sig == T.apply(e), "pi + sigma != Te at " + at);
        out.require(pi_at(S, S, e) == S.apply(e), "pi_S(Se) != Se at " + at);
        out.require(sigma_at(S, S, e).is_zero(), "sigma_S(Se) != 0 at " + at);
        out.require(check_observation(T, S, e), "observation identities fail at " + at);
        out.require(sigma_at(T, S, e, ProjectionMode::EpsilonGrid, eps20) == sig,
                    "sigma grid not stabilized at 2^-20 at " + at);
        out.require(pi_at(T, S, e, ProjectionMode::EpsilonGrid, eps20) == pi,
                    "pi grid not stabilized at 2^-20 at " + at);
    }
    return out;
}

// 4. Disjointness certificates: existence for disjoint pairs, absence for self pairs.
Outcome criterion4() {
    Outcome out;
    Rng rng(1004);
    const std::vector<Rational> epsilons{Rational(1), Rational(1, 2), Rational(1, 10)};
    for (int pair = 0; pair < 50 && out.pass; ++pair) {
        std::size_t n = 1 + rng.index(2);
        UrysonOperator T = one_dimensional(random_kernel_operator(rng, n, 1, 3, true),
                                           unit(2, 0, rng.int_in(1, 3)));
        UrysonOperator S = one_dimensional(random_kernel_operator(rng, n, 1, 3, true),
                                           unit(2, 1, rng.int_in(1, 3)));
        for (int k = 0; k < 10 && out.pass; ++k) {
            LatticeElement e = random_element(rng, T.domain());
            for (const auto& eps : epsilons) {
                auto cert = disjointness_certificate(T, S, e, eps);
                out.require(cert.has_value(), "no certificate, pair " + std::to_string(pair) + " eps=" +
                                                  eps.str() + " e=(" + e.str() + ")");
                if (cert)
                    out.require(certificate_valid(*cert, T, S, e),
                                "invalid certificate, pair " + std::to_string(pair));
            }
        }
    }
    for (int pair = 0; pair < 50 && out.pass; ++pair) {
        std::size_t n = 1 + rng.index(2);
        UrysonOperator base = random_kernel_operator(rng, n, 2, 3, true);
        auto kernel = base.kernel();
        kernel[0][0] = kernel[0][0].max_with(PiecewiseLinearFn::absolute());
        UrysonOperator T(base.domain(), 2, std::move(kernel));
        LatticeElement e = random_positive_element(rng, T.domain()) + unit(n, 0, 1);
        auto cert = disjointness_certificate(T, T, e, Rational(1, 10));
        out.require(!cert.has_value(), "self pair " + std::to_string(pair) + " found a certificate");
    }
    return out;
}

// 5. One-dimensional band formula equals the generic evaluation; worked example.
Outcome criterion5() {
    Outcome out;
    Rng rng(1005);
    for (int trial = 0; trial < 100 && out.pass; ++trial) {
        std::size_t n = 1 + rng.index(3), m = 1 + rng.index(3);
        UrysonOperator T = random_kernel_operator(rng, n, m, 4, true);
        UrysonOperator phi = random_kernel_operator(rng, n, 1, 3, true);
        LatticeElement u = random_positive_element(rng, DomainDesc::finite(m));
        LatticeElement e = random_element(rng, T.domain());
        out.require(pi_onedim(T, phi, u, e) == pi_at(T, one_dimensional(phi, u), e),
                    "trial " + std::to_string(trial) + " e=(" + e.str() + ")");
    }
    UrysonOperator T = abs_diag(2);
    LatticeElement e = LatticeElement::finite({Rational(1), Rational(1)});
    LatticeElement u = LatticeElement::finite({Rational(1), Rational(0)});
    out.require(pi_onedim(T, abs_sum_phi(2), u, e) == LatticeElement::finite({Rational(1), Rational(0)}),
                "worked example pi != (1,0)");
    out.require(sigma_onedim(T, abs_sum_phi(2), u, e) == LatticeElement::finite({Rational(0), Rational(1)}),
                "worked example sigma != (0,1)");
    return out;
}

// 6. Increasing sets: singleton consistency and scaling invariance.
Outcome criterion6() {
    Outcome out;
    Rng rng(1006);
    for (int trial = 0; trial < 50 && out.pass; ++trial) {
        std::size_t n = 1 + rng.index(3), m = 1 + rng.index(3);
        UrysonOperator T = random_kernel_operator(rng, n, m, 4, true);
        UrysonOperator S = random_kernel_operator(rng, n, m, 4, true);
        LatticeElement e = random_element(rng, T.domain());
        LatticeElement single = sigma_at(T, S, e);
        out.require(sigma_increasing(T, IncreasingSet({S}), e) == single,
                    "singleton mismatch, trial " + std::to_string(trial));
        out.require(sigma_increasing(T, IncreasingSet({S, S.scaled(Rational(2))}), e) == single,
                    "scaling changed sigma, trial " + std::to_string(trial));
    }
    return out;
}

// 7. Finite-dimensional collapse: every positive kernel operator is laterally continuous.
Outcome criterion7() {
    Outcome out;
    Rng rng(1007);
    for (int trial = 0; trial < 50 && out.pass; ++trial) {
        std::size_t n = 1 + rng.index(6);
        UrysonOperator T = random_kernel_operator(rng, n, 1 + rng.index(4), 4, true);
        for (int k = 0; k < 20 && out.pass; ++k) {
            LatticeElement e = random_element(rng, T.domain());
            LateralDecomposition d = continuous_part_at(T, e);
            out.require(d.continuous_part == T.apply(e) && d.singular_part.is_zero(),
                        "trial " + std::to_string(trial) + " e=(" + e.str() + ")");
        }
    }
    return out;
}

// 8. Sequence decomposition: kernel part continuous, tail part singular.
Outcome criterion8() {
    Outcome out;
    Rng rng(1008);
    const std::size_t res = 8;
    for (int trial = 0; trial < 100 && out.pass; ++trial) {
        std::size_t cols = 1 + rng.index(4);
        UrysonOperator T = random_ecseq_operator(rng, cols, 2, 3, true, true);
        LatticeElement e = random_element(rng, T.domain(), cols + 2);
        std::string at = "trial " + std::to_string(trial) + " e=(" + e.str() + ")";

        LateralDecomposition d = continuous_part_at(T, e, res);
        out.require(d.continuous_part == T.kernel_part().apply(e), "T_n != kernel part at " + at);
        out.require(d.singular_part == T.tail_part().apply(e), "T_s != tail part at " + at);
        out.require(op_meet_at(T.kernel_part(), T.tail_part(), e, res).is_zero(),
                    "parts not disjoint at " + at);
        out.require(chain_formula_at(T, e, res) == d.continuous_part, "chain formula differs at " + at);
        LateralDecomposition d11 = continuous_part_at(T, e, res + 3);
        out.require(d11.continuous_part == d.continuous_part, "value moved from N=8 to N=11 at " + at);
    }
    UrysonOperator worked(DomainDesc::ecseq(1), 1, {{PiecewiseLinearFn::absolute()}},
                          std::vector<PiecewiseLinearFn>{PiecewiseLinearFn::absolute()});
    LateralDecomposition d = continuous_part_at(worked, LatticeElement::ec({Rational(5)}, Rational(3)), res);
    out.require(d.continuous_part == LatticeElement::finite({Rational(5)}) &&
                    d.singular_part == LatticeElement::finite({Rational(3)}),
                "worked example did not split into (5, 3)");
    return out;
}

// 9. pi^D is an orthogonally additive fragment for every shipped admissible set.
Outcome criterion9() {
    Outcome out;
    Rng rng(1009);
    for (int trial = 0; trial < 50 && out.pass; ++trial) {
        std::size_t n = 2 + rng.index(2);
        UrysonOperator T = random_kernel_operator(rng, n, 2, 3, true);
        LatticeElement pivot = random_element(rng, T.domain());
        std::vector<AdmissibleSet> sets{
            AdmissibleSet::whole_space(T.domain()),
            AdmissibleSet::support_ideal(T.domain(), {1}),
            AdmissibleSet::fragments_of(pivot, 8),
            AdmissibleSet::null_set(T),
        };
        for (const auto& D : sets) {
            CheckOutcome c = check_fragment_property(T, D, 20, rng.next());
            out.require(c.passed, D.name() + " trial " + std::to_string(trial) + ": " + c.witness);
        }
        if (trial % 5 == 0) {
            UrysonOperator W = random_ecseq_operator(rng, 2, 2, 3, true, true);
            for (const auto& D : {AdmissibleSet::c00(), AdmissibleSet::whole_space(W.domain())}) {
                CheckOutcome c = check_fragment_property(W, D, 12, rng.next(), 6);
                out.require(c.passed,
                            D.name() + " (sequence) trial " + std::to_string(trial) + ": " + c.witness);
            }
        }
    }
    return out;
}

// 10. Byte-identical reports for a fixed seed; corrupted negative control fails with a witness.
Outcome criterion10(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        out.require(false, "no CLI path given (pass it as argv[1])");
        return out;
    }
    std::string base = cli + " verify --suite all --seed 7 --format machine";
    int code1 = 0, code2 = 0;
    std::string a = run_command(base, code1);
    std::string b = run_command(base, code2);
    out.require(code1 == 0 && code2 == 0, "verify exited nonzero on a clean run");
    out.require(!a.empty() && a == b, "reports are not byte-identical across runs");

    int code3 = 0;
    std::string c = run_command(cli + " verify --suite th1 --seed 7 --format machine --inject-corruption",
                                code3);
    out.require(code3 == 1, "corrupted run should exit 1");
    bool failing_with_witness = false;
    std::istringstream lines(c);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("\"status\":\"fail\"") != std::string::npos &&
            line.find("\"witness\":\"\"") == std::string::npos)
            failing_with_witness = true;
    }
    out.require(failing_with_witness, "no failing record with a witness in the corrupted run");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    struct Entry {
        int id;
        std::string label;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Entry> entries{
        {1, "lattice operation identities (200 pairs x 20 points)", 60, criterion1},
        {2, "closed-form join oracle (100 operators x 100 points)", 30, criterion2},
        {3, "band projection formulas (100 triples, grid to 2^-20)", 120, criterion3},
        {4, "disjointness certificates (50 + 50 pairs)", 120, criterion4},
        {5, "one-dimensional band formula (100 configurations)", 30, criterion5},
        {6, "increasing-set projections (50 configurations)", 30, criterion6},
        {7, "finite-dimensional lateral collapse (50 operators)", 30, criterion7},
        {8, "sequence-lattice decomposition (100 operators)", 120, criterion8},
        {9, "admissible-set fragment projections (50 operators)", 60, criterion9},
        {10, "report determinism and negative controls", 60, [&] { return criterion10(cli); }},
    };

    bool all_pass = true;
    for (const auto& entry : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome out = entry.run();
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = seconds < entry.budget_seconds;
        bool pass = out.pass && in_budget;
        all_pass = all_pass && pass;
        std::printf("%s  criterion-%-2d  %s  (%.1fs/%.0fs)\n", pass ? "PASS" : "FAIL", entry.id,
                    entry.label.c_str(), seconds, entry.budget_seconds);
        if (!out.pass) std::printf("      %s\n", out.detail.c_str());
        if (!in_budget) std::printf("      exceeded the runtime budget\n");
    }
    return all_pass ? 0 : 1;
}
