#ifndef URYSON_CALCULUS_HPP
#define URYSON_CALCULUS_HPP

#include "uryson/lattice.hpp"
#include "uryson/operator.hpp"

#include <string>

namespace uryson {

/// Lattice operations on operators, evaluated pointwise by enumerating
/// disjoint partitions / fragments of the argument. The supremum in R^m over
/// a finite set is the coordinate-wise maximum.
///
///   (T v S)(f) = sup { Tg + Sh : f = g + h, g ⊥ h }
///   (T ^ S)(f) = inf { Tg + Sh : f = g + h, g ⊥ h }
///   T+ (f)     = sup { Tg : g ⊑ f }
///   T- (f)     = -inf{ Tg : g ⊑ f }
///   |T|(f)     = T+(f) + T-(f),  with |Tf| <= |T|(f) checked.

LatticeElement op_join_at(const OperatorFn& T, const OperatorFn& S, const LatticeElement& f,
                          std::size_t resolution = 8);
LatticeElement op_meet_at(const OperatorFn& T, const OperatorFn& S, const LatticeElement& f,
                          std::size_t resolution = 8);
LatticeElement op_pos_at(const OperatorFn& T, const LatticeElement& f, std::size_t resolution = 8);
LatticeElement op_neg_at(const OperatorFn& T, const LatticeElement& f, std::size_t resolution = 8);
LatticeElement op_abs_at(const OperatorFn& T, const LatticeElement& f, std::size_t resolution = 8);

LatticeElement op_join_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& f,
                          std::size_t resolution = 8);
LatticeElement op_meet_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& f,
                          std::size_t resolution = 8);
LatticeElement op_pos_at(const UrysonOperator& T, const LatticeElement& f, std::size_t resolution = 8);
LatticeElement op_neg_at(const UrysonOperator& T, const LatticeElement& f, std::size_t resolution = 8);
LatticeElement op_abs_at(const UrysonOperator& T, const LatticeElement& f, std::size_t resolution = 8);

/// Materialized join of two pure-kernel operators on R^n: the entry-wise
/// pointwise maximum of the kernels. Agrees with op_join_at everywhere
/// (choices decouple across columns and output coordinates). Operators with
/// tail columns are rejected; evaluate pointwise instead.
UrysonOperator kernel_join_closed_form(const UrysonOperator& T, const UrysonOperator& S);
UrysonOperator kernel_meet_closed_form(const UrysonOperator& T, const UrysonOperator& S);
UrysonOperator kernel_abs_closed_form(const UrysonOperator& T);

/// One evaluated lattice-operation value, as produced for reporting.
struct PointwiseValue {
    enum class Formula { Join, Meet, Pos, Neg, Abs };
    Formula formula;
    LatticeElement input;
    LatticeElement output;
};

PointwiseValue::Formula parse_formula(const std::string& name);
std::string formula_name(PointwiseValue::Formula f);

/// Evaluates one formula; S is ignored for pos/neg/abs.
PointwiseValue evaluate_pointwise(PointwiseValue::Formula formula, const UrysonOperator& T,
                                  const UrysonOperator* S, const LatticeElement& f,
                                  std::size_t resolution = 8);

}  // namespace uryson

#endif
