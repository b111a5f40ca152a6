#ifndef URYSON_BAND_HPP
#define URYSON_BAND_HPP

#include "uryson/calculus.hpp"
#include "uryson/lattice.hpp"
#include "uryson/operator.hpp"

#include <optional>
#include <vector>

namespace uryson {

/// With finitely many (rho, f) candidates the inf over epsilon > 0 of the
/// projection formulas degenerates: a pair stays feasible for every epsilon
/// iff its constraint value is exactly 0. ExactLimit evaluates that limit
/// directly; EpsilonGrid evaluates the literal formula at one epsilon and is
/// kept as a cross-check (it stabilizes to the exact limit once epsilon drops
/// below the smallest positive constraint ratio).
enum class ProjectionMode { ExactLimit, EpsilonGrid };

/// Complement of the band projection value: sigma_S Te, the part of Te
/// outside the band generated by S.
///   sigma_S Te = inf_{eps>0} sup { rho Tf : rho Sf <= eps Se }
LatticeElement sigma_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                        ProjectionMode mode = ProjectionMode::ExactLimit, const Rational& epsilon = Rational(0),
                        std::size_t resolution = 8);

/// Band projection value: pi_S Te.
///   pi_S Te = sup_{eps>0} inf { rho Tf + rho^perp Te : rho S(e-f) <= eps Se }
LatticeElement pi_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                     ProjectionMode mode = ProjectionMode::ExactLimit, const Rational& epsilon = Rational(0),
                     std::size_t resolution = 8);

/// Evaluator-based variants; T is any positive orthogonally additive value
/// map (e.g. the sigma values of another projection).
LatticeElement sigma_at_fn(const OperatorFn& T, const UrysonOperator& S, const LatticeElement& e,
                           ProjectionMode mode = ProjectionMode::ExactLimit,
                           const Rational& epsilon = Rational(0), std::size_t resolution = 8);
LatticeElement pi_at_fn(const OperatorFn& T, const UrysonOperator& S, const LatticeElement& e,
                        ProjectionMode mode = ProjectionMode::ExactLimit, const Rational& epsilon = Rational(0),
                        std::size_t resolution = 8);

/// pi and sigma parts together; their sum is Te exactly (checked).
struct ProjectionValue {
    LatticeElement pi_part;
    LatticeElement sigma_part;
    ProjectionMode mode;
    std::optional<Rational> epsilon;  // EpsilonGrid only
};
ProjectionValue band_project(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                             ProjectionMode mode = ProjectionMode::ExactLimit,
                             const Rational& epsilon = Rational(0), std::size_t resolution = 8);

/// Largest epsilon below which the grid formulas coincide with the exact
/// limit for this instance; nullopt when every epsilon already does.
std::optional<Rational> grid_stabilization_threshold(const UrysonOperator& T, const UrysonOperator& S,
                                                     const LatticeElement& e, std::size_t resolution = 8);

/// rho_{Se}^perp (sigma_S Te) = rho_{Se}^perp Te  and  rho_{Se} (pi_S Te) = pi_S Te.
bool check_observation(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& e,
                       std::size_t resolution = 8);

/// Finite upward-directed set of positive operators; the constructor closes
/// the list under materialized pairwise joins.
class IncreasingSet {
public:
    explicit IncreasingSet(std::vector<UrysonOperator> members);
    const std::vector<UrysonOperator>& members() const { return members_; }

private:
    std::vector<UrysonOperator> members_;
};

/// sigma against the band generated by an increasing set: the minimum of the
/// single-operator values over the (finite, directed) member list.
LatticeElement sigma_increasing(const UrysonOperator& T, const IncreasingSet& A, const LatticeElement& e,
                                std::size_t resolution = 8);

/// Witness that T and S are disjoint at e for a given epsilon: a partition
/// of unity and one fragment per block with
///   rho_a T e_a <= eps Te   and   rho_a S(e - e_a) <= eps Se.
struct DisjointnessCertificate {
    PartitionOfUnity partition;
    std::vector<LatticeElement> block_fragments;
    Rational epsilon;
};

bool certificate_valid(const DisjointnessCertificate& cert, const UrysonOperator& T, const UrysonOperator& S,
                       const LatticeElement& e);

/// Searches partitions by block count ascending and candidate fragments by
/// support size descending; returns the first valid certificate, if any.
std::optional<DisjointnessCertificate> disjointness_certificate(const UrysonOperator& T,
                                                                const UrysonOperator& S,
                                                                const LatticeElement& e,
                                                                const Rational& epsilon,
                                                                std::size_t resolution = 8);

/// One-dimensional band forms for S = phi (x) u. The sigma value reduces to
///   sigma_S Te = rho_u^perp Te + sup { rho_u Tf : phi(f) = 0, f ⊑ e },
/// and pi is its complement to Te. Agrees with the generic pi_at/sigma_at.
LatticeElement sigma_onedim(const UrysonOperator& T, const UrysonOperator& phi, const LatticeElement& u,
                            const LatticeElement& e, std::size_t resolution = 8);
LatticeElement pi_onedim(const UrysonOperator& T, const UrysonOperator& phi, const LatticeElement& u,
                         const LatticeElement& e, std::size_t resolution = 8);

/// Projection onto the band generated by a finite family of one-dimensional
/// operators, via the increasing-set machinery on the materialized family.
LatticeElement pi_onedim_band(const UrysonOperator& T, const std::vector<OneDimensionalOperator>& family,
                              const LatticeElement& e, std::size_t resolution = 8);

}  // namespace uryson

#endif
