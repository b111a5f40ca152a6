#include "uryson/calculus.hpp"

#include <stdexcept>

namespace uryson {

namespace {

void require_matching(const UrysonOperator& T, const UrysonOperator& S) {
    if (T.domain().kind != S.domain().kind || T.codomain() != S.codomain())
        throw std::invalid_argument("operator model mismatch");
    if (T.domain().is_finite() && T.domain().columns != S.domain().columns)
        throw std::invalid_argument("operator model mismatch");
}

LatticeElement fold_max(const std::vector<LatticeElement>& values) {
    LatticeElement acc = values.front();
    for (std::size_t i = 1; i < values.size(); ++i) acc = acc.max_with(values[i]);
    return acc;
}

LatticeElement fold_min(const std::vector<LatticeElement>& values) {
    LatticeElement acc = values.front();
    for (std::size_t i = 1; i < values.size(); ++i) acc = acc.min_with(values[i]);
    return acc;
}

std::vector<LatticeElement> partition_values(const OperatorFn& T, const OperatorFn& S,
                                             const LatticeElement& f, std::size_t resolution) {
    std::vector<LatticeElement> values;
    for (const auto& [g, h] : disjoint_partitions(f, resolution)) values.push_back(T(g) + S(h));
    return values;
}

std::vector<LatticeElement> fragment_values(const OperatorFn& T, const LatticeElement& f,
                                            std::size_t resolution) {
    std::vector<LatticeElement> values;
    for (const auto& g : fragments(f, resolution)) values.push_back(T(g));
    return values;
}

}  // namespace

LatticeElement op_join_at(const OperatorFn& T, const OperatorFn& S, const LatticeElement& f,
                          std::size_t resolution) {
    return fold_max(partition_values(T, S, f, resolution));
}

LatticeElement op_meet_at(const OperatorFn& T, const OperatorFn& S, const LatticeElement& f,
                          std::size_t resolution) {
    return fold_min(partition_values(T, S, f, resolution));
}

LatticeElement op_pos_at(const OperatorFn& T, const LatticeElement& f, std::size_t resolution) {
    return fold_max(fragment_values(T, f, resolution));
}

LatticeElement op_neg_at(const OperatorFn& T, const LatticeElement& f, std::size_t resolution) {
    return -fold_min(fragment_values(T, f, resolution));
}

LatticeElement op_abs_at(const OperatorFn& T, const LatticeElement& f, std::size_t resolution) {
    LatticeElement value = op_pos_at(T, f, resolution) + op_neg_at(T, f, resolution);
    if (!T(f).abs().leq(value))
        throw std::logic_error("op_abs_at: |Tf| <= |T|(f) violated; the evaluator is not orthogonally additive");
    return value;
}

LatticeElement op_join_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& f,
                          std::size_t resolution) {
    require_matching(T, S);
    return op_join_at(as_fn(T), as_fn(S), f, resolution);
}

LatticeElement op_meet_at(const UrysonOperator& T, const UrysonOperator& S, const LatticeElement& f,
                          std::size_t resolution) {
    require_matching(T, S);
    return op_meet_at(as_fn(T), as_fn(S), f, resolution);
}

LatticeElement op_pos_at(const UrysonOperator& T, const LatticeElement& f, std::size_t resolution) {
    return op_pos_at(as_fn(T), f, resolution);
}

LatticeElement op_neg_at(const UrysonOperator& T, const LatticeElement& f, std::size_t resolution) {
    return op_neg_at(as_fn(T), f, resolution);
}

LatticeElement op_abs_at(const UrysonOperator& T, const LatticeElement& f, std::size_t resolution) {
    return op_abs_at(as_fn(T), f, resolution);
}

namespace {

void require_pure_kernel_finite(const UrysonOperator& T) {
    if (!T.pure_kernel() || !T.domain().is_finite())
        throw std::invalid_argument("closed form requires pure-kernel operators on R^n");
}

}  // namespace

UrysonOperator kernel_join_closed_form(const UrysonOperator& T, const UrysonOperator& S) {
    require_matching(T, S);
    require_pure_kernel_finite(T);
    require_pure_kernel_finite(S);
    return T.entrywise_max(S);
}

UrysonOperator kernel_meet_closed_form(const UrysonOperator& T, const UrysonOperator& S) {
    require_matching(T, S);
    require_pure_kernel_finite(T);
    require_pure_kernel_finite(S);
    return T.entrywise_min(S);
}

UrysonOperator kernel_abs_closed_form(const UrysonOperator& T) {
    require_pure_kernel_finite(T);
    return T.entrywise_absolute();
}

PointwiseValue::Formula parse_formula(const std::string& name) {
    if (name == "join") return PointwiseValue::Formula::Join;
    if (name == "meet") return PointwiseValue::Formula::Meet;
    if (name == "pos") return PointwiseValue::Formula::Pos;
    if (name == "neg") return PointwiseValue::Formula::Neg;
    if (name == "abs") return PointwiseValue::Formula::Abs;
    throw std::invalid_argument("unknown formula '" + name + "' (expected join|meet|pos|neg|abs)");
}

std::string formula_name(PointwiseValue::Formula f) {
    switch (f) {
        case PointwiseValue::Formula::Join: return "join";
        case PointwiseValue::Formula::Meet: return "meet";
        case PointwiseValue::Formula::Pos: return "pos";
        case PointwiseValue::Formula::Neg: return "neg";
        case PointwiseValue::Formula::Abs: return "abs";
    }
    return "?";
}

PointwiseValue evaluate_pointwise(PointwiseValue::Formula formula, const UrysonOperator& T,
                                  const UrysonOperator* S, const LatticeElement& f, std::size_t resolution) {
    using F = PointwiseValue::Formula;
    if ((formula == F::Join || formula == F::Meet) && S == nullptr)
        throw std::invalid_argument("join/meet need a second operator");
    LatticeElement out = [&] {
        switch (formula) {
            case F::Join: return op_join_at(T, *S, f, resolution);
            case F::Meet: return op_meet_at(T, *S, f, resolution);
            case F::Pos: return op_pos_at(T, f, resolution);
            case F::Neg: return op_neg_at(T, f, resolution);
            case F::Abs: return op_abs_at(T, f, resolution);
        }
        throw std::logic_error("unreachable");
    }();
    return PointwiseValue{formula, f, std::move(out)};
}

}  // namespace uryson
