#ifndef URYSON_SUITES_HPP
#define URYSON_SUITES_HPP

#include "uryson/operator.hpp"
#include "uryson/report.hpp"
#include "uryson/scenario.hpp"

#include <string>
#include <vector>

namespace uryson {

struct SuiteOptions {
    std::string suite = "all";
    std::uint64_t seed = 7;
    std::size_t trials = 0;      // 0: use the scenario's value
    std::size_t resolution = 0;  // 0: use the scenario's value
    bool inject_corruption = false;
};

const std::vector<std::string>& suite_names();

/// Runs the named randomized verification suite. Deterministic: identical
/// (scenario, options) produce identical reports.
Report run_suite(const Scenario& scenario, const SuiteOptions& options);

/// Evaluator with a cross term injected on the first output coordinate;
/// breaks orthogonal additivity. Negative control for the checkers.
OperatorFn corrupt_with_cross_term(const UrysonOperator& op);

}  // namespace uryson

#endif
