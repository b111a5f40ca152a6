#ifndef URYSON_SCENARIO_HPP
#define URYSON_SCENARIO_HPP

#include "uryson/lateral.hpp"
#include "uryson/lattice.hpp"
#include "uryson/operator.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace uryson {

struct SuiteParams {
    std::uint64_t seed = 7;
    std::size_t trials = 50;
    std::size_t resolution = 8;
    std::size_t max_dim = 4;  // cap on random n and m in the verification suites
};

/// Named inputs for the CLI and the verification suites.
struct Scenario {
    std::map<std::string, UrysonOperator> operators;
    std::map<std::string, LatticeElement> elements;
    std::map<std::string, AdmissibleSet> admissible_sets;
    std::map<std::string, nlohmann::json> admissible_specs;  // as written, for saving
    SuiteParams params;

    const UrysonOperator& op(const std::string& name) const;
    const LatticeElement& element(const std::string& name) const;
    const AdmissibleSet& admissible(const std::string& name) const;
};

/// Thrown on malformed scenario files; the message names the offending entry.
struct ScenarioError : std::runtime_error {
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

Scenario load_scenario(const std::string& path);
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

/// JSON <-> core types (exposed for tests and tooling).
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
PiecewiseLinearFn pwl_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json pwl_to_json(const PiecewiseLinearFn& f);
LatticeElement element_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json element_to_json(const LatticeElement& x);
UrysonOperator operator_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json operator_to_json(const UrysonOperator& op);

/// Element given on the command line: a scenario name, "0" for the zero of
/// the domain, "a,b,c" for a finite vector, or "a,b;t" for prefix + tail.
LatticeElement parse_element_arg(const Scenario& scenario, const DomainDesc& domain, const std::string& text);

}  // namespace uryson

#endif
