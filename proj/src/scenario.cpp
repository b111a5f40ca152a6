#include "uryson/scenario.hpp"

#include <fstream>
#include <sstream>

namespace uryson {

using nlohmann::json;

const UrysonOperator& Scenario::op(const std::string& name) const {
    auto it = operators.find(name);
    if (it == operators.end()) throw ScenarioError("unknown operator '" + name + "'");
    return it->second;
}

const LatticeElement& Scenario::element(const std::string& name) const {
    auto it = elements.find(name);
    if (it == elements.end()) throw ScenarioError("unknown element '" + name + "'");
    return it->second;
}

const AdmissibleSet& Scenario::admissible(const std::string& name) const {
    auto it = admissible_sets.find(name);
    if (it == admissible_sets.end()) throw ScenarioError("unknown admissible set '" + name + "'");
    return it->second;
}

Rational rational_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ScenarioError(where + ": " + e.what());
    }
    throw ScenarioError(where + ": expected an integer or a \"p/q\" string");
}

PiecewiseLinearFn pwl_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("breakpoints"))
        throw ScenarioError(where + ": expected {breakpoints, left_slope, right_slope}");
    std::vector<PiecewiseLinearFn::Breakpoint> bps;
    const json& arr = j.at("breakpoints");
    if (!arr.is_array() || arr.empty()) throw ScenarioError(where + ": breakpoints must be a nonempty array");
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const json& bp = arr[k];
        if (!bp.is_array() || bp.size() != 2)
            throw ScenarioError(where + ": breakpoint " + std::to_string(k + 1) + " must be [t, value]");
        bps.push_back({rational_from_json(bp[0], where + " breakpoint t"),
                       rational_from_json(bp[1], where + " breakpoint value")});
    }
    Rational ls = j.contains("left_slope") ? rational_from_json(j.at("left_slope"), where + " left_slope")
                                           : Rational(0);
    Rational rs = j.contains("right_slope") ? rational_from_json(j.at("right_slope"), where + " right_slope")
                                            : Rational(0);
    try {
        return PiecewiseLinearFn(std::move(bps), std::move(ls), std::move(rs));
    } catch (const std::exception& e) {
        throw ScenarioError(where + ": " + e.what());
    }
}

json pwl_to_json(const PiecewiseLinearFn& f) {
    json out;
    out["breakpoints"] = json::array();
    for (const auto& b : f.breakpoints()) out["breakpoints"].push_back({b.first.str(), b.second.str()});
    out["left_slope"] = f.left_slope().str();
    out["right_slope"] = f.right_slope().str();
    return out;
}

LatticeElement element_from_json(const json& j, const std::string& where) {
    if (j.is_object() && j.contains("coords")) {
        std::vector<Rational> coords;
        for (const auto& c : j.at("coords")) coords.push_back(rational_from_json(c, where + " coords"));
        return LatticeElement::finite(std::move(coords));
    }
    if (j.is_object() && j.contains("prefix")) {
        std::vector<Rational> pre;
        for (const auto& c : j.at("prefix")) pre.push_back(rational_from_json(c, where + " prefix"));
        Rational tail = j.contains("tail") ? rational_from_json(j.at("tail"), where + " tail") : Rational(0);
        return LatticeElement::ec(std::move(pre), std::move(tail));
    }
    throw ScenarioError(where + ": expected {coords: [...]} or {prefix: [...], tail: r}");
}

json element_to_json(const LatticeElement& x) {
    json out;
    if (x.is_finite()) {
        out["coords"] = json::array();
        for (const auto& c : x.coords()) out["coords"].push_back(c.str());
    } else {
        out["prefix"] = json::array();
        for (const auto& c : x.prefix()) out["prefix"].push_back(c.str());
        out["tail"] = x.tail().str();
    }
    return out;
}

namespace {

DomainDesc domain_from_string(const std::string& text, const std::string& where) {
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string kind = text.substr(0, colon);
        std::size_t cols = 0;
        try {
            cols = static_cast<std::size_t>(std::stoul(text.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ScenarioError(where + ": bad domain '" + text + "'");
        }
        if (kind == "finite") return DomainDesc::finite(cols);
        if (kind == "ecseq") return DomainDesc::ecseq(cols);
    }
    throw ScenarioError(where + ": bad domain '" + text + "' (expected finite:n or ecseq:J)");
}

}  // namespace

UrysonOperator operator_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw ScenarioError(where + ": expected an object");
    if (!j.contains("domain") || !j.at("domain").is_string())
        throw ScenarioError(where + ": missing domain");
    DomainDesc domain = domain_from_string(j.at("domain").get<std::string>(), where);
    if (!j.contains("codomain") || !j.at("codomain").is_number_integer())
        throw ScenarioError(where + ": missing codomain");
    std::size_t m = j.at("codomain").get<std::size_t>();
    if (!j.contains("kernel") || !j.at("kernel").is_array())
        throw ScenarioError(where + ": missing kernel");
    std::vector<std::vector<PiecewiseLinearFn>> kernel;
    const json& rows = j.at("kernel");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array()) throw ScenarioError(where + ": kernel row " + std::to_string(i + 1));
        std::vector<PiecewiseLinearFn> row;
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            row.push_back(pwl_from_json(
                rows[i][k], where + " kernel entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")"));
        kernel.push_back(std::move(row));
    }
    std::optional<std::vector<PiecewiseLinearFn>> tail;
    if (j.contains("tail")) {
        std::vector<PiecewiseLinearFn> col;
        const json& entries = j.at("tail");
        if (!entries.is_array()) throw ScenarioError(where + ": tail must be an array");
        for (std::size_t i = 0; i < entries.size(); ++i)
            col.push_back(pwl_from_json(entries[i], where + " tail entry (" + std::to_string(i + 1) + ")"));
        tail = std::move(col);
    }
    try {
        return UrysonOperator(domain, m, std::move(kernel), std::move(tail));
    } catch (const std::exception& e) {
        throw ScenarioError(where + ": " + e.what());
    }
}

json operator_to_json(const UrysonOperator& op) {
    json out;
    out["domain"] = op.domain().str();
    out["codomain"] = op.codomain();
    out["kernel"] = json::array();
    for (const auto& row : op.kernel()) {
        json r = json::array();
        for (const auto& entry : row) r.push_back(pwl_to_json(entry));
        out["kernel"].push_back(std::move(r));
    }
    if (op.tail_column()) {
        out["tail"] = json::array();
        for (const auto& entry : *op.tail_column()) out["tail"].push_back(pwl_to_json(entry));
    }
    return out;
}

namespace {

AdmissibleSet admissible_from_json(const json& j, const std::string& name, const Scenario& partial,
                                   std::size_t resolution) {
    std::string where = "admissible set '" + name + "'";
    if (!j.is_object() || !j.contains("kind")) throw ScenarioError(where + ": missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "whole") {
        if (!j.contains("domain")) throw ScenarioError(where + ": whole needs a domain");
        return AdmissibleSet::whole_space(domain_from_string(j.at("domain").get<std::string>(), where));
    }
    if (kind == "c00") return AdmissibleSet::c00();
    if (kind == "support_ideal") {
        if (!j.contains("domain") || !j.contains("coords"))
            throw ScenarioError(where + ": support_ideal needs domain and coords");
        std::vector<std::size_t> coords;
        for (const auto& c : j.at("coords")) coords.push_back(c.get<std::size_t>());
        return AdmissibleSet::support_ideal(domain_from_string(j.at("domain").get<std::string>(), where),
                                            std::move(coords));
    }
    if (kind == "fragments_of") {
        if (!j.contains("element")) throw ScenarioError(where + ": fragments_of needs an element name");
        return AdmissibleSet::fragments_of(partial.element(j.at("element").get<std::string>()), resolution);
    }
    if (kind == "null_set") {
        if (!j.contains("operator")) throw ScenarioError(where + ": null_set needs an operator name");
        try {
            return AdmissibleSet::null_set(partial.op(j.at("operator").get<std::string>()));
        } catch (const std::exception& e) {
            throw ScenarioError(where + ": " + e.what());
        }
    }
    throw ScenarioError(where + ": unknown kind '" + kind + "'");
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw ScenarioError("scenario: top level must be an object");
    Scenario s;
    if (doc.contains("suites")) {
        const json& p = doc.at("suites");
        if (p.contains("seed")) s.params.seed = p.at("seed").get<std::uint64_t>();
        if (p.contains("trials")) s.params.trials = p.at("trials").get<std::size_t>();
        if (p.contains("resolution")) s.params.resolution = p.at("resolution").get<std::size_t>();
        if (p.contains("max_dim")) s.params.max_dim = p.at("max_dim").get<std::size_t>();
        if (s.params.max_dim > 12 || s.params.resolution > 12)
            throw ScenarioError("scenario: dimension caps limited to 12 (fragment enumeration is 2^dim)");
    }
    if (doc.contains("operators"))
        for (const auto& [name, body] : doc.at("operators").items())
            s.operators.insert({name, operator_from_json(body, "operator '" + name + "'")});
    if (doc.contains("elements"))
        for (const auto& [name, body] : doc.at("elements").items())
            s.elements.insert({name, element_from_json(body, "element '" + name + "'")});
    if (doc.contains("admissible_sets"))
        for (const auto& [name, body] : doc.at("admissible_sets").items()) {
            s.admissible_sets.insert({name, admissible_from_json(body, name, s, s.params.resolution)});
            s.admissible_specs.insert({name, body});
        }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i)
            if (text[i] == '\n') ++line;
        throw ScenarioError("parse error in '" + path + "' at line " + std::to_string(line) + ": " + e.what());
    }
    return scenario_from_json(doc);
}

json scenario_to_json(const Scenario& scenario) {
    json doc;
    doc["suites"] = {{"seed", scenario.params.seed},
                     {"trials", scenario.params.trials},
                     {"resolution", scenario.params.resolution},
                     {"max_dim", scenario.params.max_dim}};
    doc["operators"] = json::object();
    for (const auto& [name, op] : scenario.operators) doc["operators"][name] = operator_to_json(op);
    doc["elements"] = json::object();
    for (const auto& [name, x] : scenario.elements) doc["elements"][name] = element_to_json(x);
    doc["admissible_sets"] = json::object();
    for (const auto& [name, spec] : scenario.admissible_specs) doc["admissible_sets"][name] = spec;
    return doc;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ScenarioError("cannot write scenario file '" + path + "'");
    out << scenario_to_json(scenario).dump(2) << "\n";
}

LatticeElement parse_element_arg(const Scenario& scenario, const DomainDesc& domain, const std::string& text) {
    auto named = scenario.elements.find(text);
    if (named != scenario.elements.end()) return named->second;
    if (text == "0") {
        if (domain.is_finite())
            return LatticeElement::finite(std::vector<Rational>(domain.columns, Rational(0)));
        return LatticeElement::ec({}, Rational(0));
    }
    auto parse_list = [](const std::string& chunk) {
        std::vector<Rational> out;
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(Rational::parse(item));
        return out;
    };
    try {
        auto semi = text.find(';');
        if (semi != std::string::npos)
            return LatticeElement::ec(parse_list(text.substr(0, semi)),
                                      Rational::parse(text.substr(semi + 1)));
        std::vector<Rational> coords = parse_list(text);
        if (domain.is_finite()) return LatticeElement::finite(std::move(coords));
        return LatticeElement::ec(std::move(coords), Rational(0));
    } catch (const std::exception& e) {
        throw ScenarioError("cannot parse element '" + text + "': " + e.what());
    }
}

}  // namespace uryson
