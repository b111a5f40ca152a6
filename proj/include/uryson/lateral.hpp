#ifndef URYSON_LATERAL_HPP
#define URYSON_LATERAL_HPP

#include "uryson/lattice.hpp"
#include "uryson/operator.hpp"

#include <functional>
#include <string>
#include <vector>

namespace uryson {

/// Decidable subset D of E that is closed under taking fragments and under
/// sums of disjoint members, with a deterministic finite sample generator
/// per resolution. `laterally_dense` marks sets through which every element
/// is a lateral limit (with the justification recorded as free text).
class AdmissibleSet {
public:
    using Predicate = std::function<bool(const LatticeElement&)>;
    using Sampler = std::function<std::vector<LatticeElement>(std::size_t)>;

    AdmissibleSet(std::string name, DomainDesc domain, Predicate contains, Sampler samples,
                  bool laterally_dense, std::string density_note);

    const std::string& name() const { return name_; }
    const DomainDesc& domain() const { return domain_; }
    bool contains(const LatticeElement& x) const { return contains_(x); }
    std::vector<LatticeElement> samples(std::size_t resolution) const { return samples_(resolution); }
    bool laterally_dense() const { return laterally_dense_; }
    const std::string& density_note() const { return density_note_; }

    /// D = E.
    static AdmissibleSet whole_space(const DomainDesc& domain);
    /// Order ideal {x : supp(x) within mask} (sequence domains: tail = 0 too).
    static AdmissibleSet support_ideal(const DomainDesc& domain, std::vector<std::size_t> coords1based);
    /// D = F_e, the fragments of a fixed element.
    static AdmissibleSet fragments_of(const LatticeElement& e, std::size_t resolution);
    /// Null set N_T = {e : Te = 0} of a positive operator; members are found
    /// from the zero intervals of the kernel entries.
    static AdmissibleSet null_set(const UrysonOperator& T);
    /// Finitely-supported sequences (tail 0); laterally dense in the
    /// eventually-constant sequence lattice via prefix truncation chains.
    static AdmissibleSet c00();

private:
    std::string name_;
    DomainDesc domain_;
    Predicate contains_;
    Sampler samples_;
    bool laterally_dense_;
    std::string density_note_;
};

/// Finite generator list for an upward-saturated family of admissible sets.
struct FamilyOfAdmissible {
    std::vector<AdmissibleSet> generators;
};

struct AdmissibilityReport {
    bool passed = true;
    std::size_t fragment_checks = 0;
    std::size_t sum_checks = 0;
    std::string witness;
};

/// Exhaustively verifies both closure conditions on the sample list.
AdmissibilityReport check_admissible(const AdmissibleSet& D, std::size_t resolution);

/// pi^D T (x) = sup { Ty : y ⊑ x, y in D }   (empty set -> 0, which the
/// member y = 0 always realizes for positive T).
LatticeElement pi_D_at(const UrysonOperator& T, const AdmissibleSet& D, const LatticeElement& x,
                       std::size_t resolution = 8);
LatticeElement pi_D_at_fn(const OperatorFn& T, std::size_t codomain, const AdmissibleSet& D,
                          const LatticeElement& x, std::size_t resolution = 8);

/// pi^D T is an orthogonally additive fragment of T: checks additivity on
/// disjoint pairs, 0 <= pi^D T <= T, and meet(pi^D T, T - pi^D T) = 0.
CheckOutcome check_fragment_property(const UrysonOperator& T, const AdmissibleSet& D, std::size_t trials,
                                     std::uint64_t seed, std::size_t resolution = 8);

/// inf over the family generators of pi^D (coordinate-wise minimum).
LatticeElement pi_family_at(const UrysonOperator& T, const FamilyOfAdmissible& family, const LatticeElement& e,
                            std::size_t resolution = 8);

/// T e split into laterally continuous and singular parts.
struct LateralDecomposition {
    LatticeElement continuous_part;
    LatticeElement singular_part;
};

/// Laterally continuous part at e: on R^n every positive operator is
/// laterally continuous, so the value is (Te, 0). On the sequence lattice the
/// infimum over the shipped laterally dense catalog (whole space, c00) is
/// evaluated and cross-checked against the canonical-chain formula
/// inf { sup_a T e_a : e_a lat-> e }; stabilization between `resolution` and
/// `resolution + 3` is asserted.
LateralDecomposition continuous_part_at(const UrysonOperator& T, const LatticeElement& e,
                                        std::size_t resolution = 8);

/// sup of T over the steps of a lateral chain.
LatticeElement chain_value(const UrysonOperator& T, const FragmentChain& chain);
/// Canonical-chain rendering of the continuous part at e.
LatticeElement chain_formula_at(const UrysonOperator& T, const LatticeElement& e, std::size_t resolution = 8);

/// T vanishes on the (laterally dense) admissible set D, judged on samples.
bool is_singular(const UrysonOperator& T, const AdmissibleSet& D, std::size_t resolution = 8);

/// Singular and continuous parts are disjoint and the decomposition recovers
/// them: meet(T_kernel, T_tail) = 0 on the samples and
/// continuous_part_at(T_kernel + T_tail) = (T_kernel e, T_tail e).
CheckOutcome check_orthogonality_theorem(const UrysonOperator& kernel_op, const UrysonOperator& tail_op,
                                         const std::vector<LatticeElement>& e_samples,
                                         std::size_t resolution = 8);

}  // namespace uryson

#endif
