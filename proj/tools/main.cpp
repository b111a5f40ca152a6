#include "uryson/band.hpp"
#include "uryson/calculus.hpp"
#include "uryson/lateral.hpp"
#include "uryson/scenario.hpp"
#include "uryson/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace uryson;
using nlohmann::json;

struct GlobalArgs {
    std::string scenario_path;
    std::string format = "table";
};

Scenario load_or_default(const GlobalArgs& args) {
    if (args.scenario_path.empty()) return Scenario{};
    return load_scenario(args.scenario_path);
}

using Fields = std::vector<std::pair<std::string, std::string>>;

/// Table mode prints a lone value bare (so `calc pos T f` emits just "1/1")
/// and labels everything else; machine mode emits one JSON object.
void print_value(const GlobalArgs& args, const std::string& command, const Fields& fields) {
    if (args.format == "machine") {
        json out;
        out["command"] = command;
        for (const auto& [key, value] : fields) out[key] = value;
        std::cout << out.dump() << "\n";
        return;
    }
    if (fields.size() == 1) {
        std::cout << fields.front().second << "\n";
        return;
    }
    for (const auto& [key, value] : fields) std::cout << key << ": " << value << "\n";
}

int cmd_eval(const GlobalArgs& args, const std::string& op_name, const std::string& elem) {
    Scenario scenario = load_or_default(args);
    const UrysonOperator& T = scenario.op(op_name);
    LatticeElement x = parse_element_arg(scenario, T.domain(), elem);
    print_value(args, "eval", {{"value", T.apply(x).str()}});
    return 0;
}

int cmd_calc(const GlobalArgs& args, const std::string& formula, const std::string& t_name,
             const std::string& s_name, const std::string& elem, std::size_t resolution) {
    Scenario scenario = load_or_default(args);
    PointwiseValue::Formula f = parse_formula(formula);
    const UrysonOperator& T = scenario.op(t_name);
    const UrysonOperator* S = nullptr;
    bool needs_s = f == PointwiseValue::Formula::Join || f == PointwiseValue::Formula::Meet;
    std::string x_arg = elem;
    if (needs_s) {
        if (s_name.empty()) throw ScenarioError("calc " + formula + " needs two operators");
        S = &scenario.op(s_name);
    } else if (elem.empty()) {
        x_arg = s_name;  // three-argument form: calc pos T x
    }
    if (x_arg.empty()) throw ScenarioError("calc: missing element argument");
    LatticeElement x = parse_element_arg(scenario, T.domain(), x_arg);
    PointwiseValue value = evaluate_pointwise(f, T, S, x, resolution);
    print_value(args, "calc", {{"value", value.output.str()}});
    return 0;
}

int cmd_band_project(const GlobalArgs& args, const std::string& t_name, const std::string& s_name,
                     const std::string& elem, const std::string& mode_name, const std::string& eps_text,
                     std::size_t resolution) {
    Scenario scenario = load_or_default(args);
    const UrysonOperator& T = scenario.op(t_name);
    const UrysonOperator& S = scenario.op(s_name);
    LatticeElement e = parse_element_arg(scenario, T.domain(), elem);
    ProjectionMode mode = ProjectionMode::ExactLimit;
    Rational eps(0);
    if (mode_name == "grid") {
        mode = ProjectionMode::EpsilonGrid;
        eps = Rational::parse(eps_text);
    } else if (mode_name != "exact") {
        throw ScenarioError("band-project: mode must be exact or grid");
    }
    ProjectionValue value = band_project(T, S, e, mode, eps, resolution);
    print_value(args, "band-project",
                {{"pi", value.pi_part.str()}, {"sigma", value.sigma_part.str()}});
    return 0;
}

int cmd_decompose(const GlobalArgs& args, const std::string& t_name, const std::string& elem,
                  std::size_t resolution) {
    Scenario scenario = load_or_default(args);
    const UrysonOperator& T = scenario.op(t_name);
    LatticeElement e = parse_element_arg(scenario, T.domain(), elem);
    LateralDecomposition d = continuous_part_at(T, e, resolution);
    print_value(args, "decompose",
                {{"continuous", d.continuous_part.str()}, {"singular", d.singular_part.str()}});
    return 0;
}

int cmd_admissible(const GlobalArgs& args, const std::string& d_name, bool check, std::size_t resolution) {
    Scenario scenario = load_or_default(args);
    const AdmissibleSet& D = scenario.admissible(d_name);
    if (!check) {
        print_value(args, "admissible",
                    {{"name", D.name()},
                     {"laterally_dense", D.laterally_dense() ? "true" : "false"},
                     {"samples", std::to_string(D.samples(scenario.params.resolution).size())}});
        return 0;
    }
    AdmissibilityReport r = check_admissible(D, resolution);
    print_value(args, "admissible",
                {{"name", D.name()},
                 {"status", r.passed ? "pass" : "fail"},
                 {"fragment_checks", std::to_string(r.fragment_checks)},
                 {"sum_checks", std::to_string(r.sum_checks)},
                 {"witness", r.witness}});
    return r.passed ? 0 : 1;
}

int cmd_verify(const GlobalArgs& args, const SuiteOptions& options, const std::string& out_path) {
    Scenario scenario = load_or_default(args);
    Report report = run_suite(scenario, options);
    std::string text = args.format == "machine" ? report.machine_text() : report.table_text();
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ScenarioError("cannot write report to '" + out_path + "'");
        out << text;
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_report(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw ScenarioError("cannot open report '" + in_path + "'");
    std::string line;
    std::size_t total = 0, failed = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        if (rec.value("type", "") == "summary") {
            std::cout << "suite " << rec.value("suite", "?") << " seed " << rec.value("seed", 0) << "\n";
            continue;
        }
        ++total;
        bool pass = rec.value("status", "") == "pass";
        if (!pass) ++failed;
        std::cout << (pass ? "pass  " : "FAIL  ") << rec.value("check", "?") << " [" << rec.value("anchor", "?")
                  << "]\n";
        if (!pass) std::cout << "      witness: " << rec.value("witness", "") << "\n";
    }
    std::cout << (total - failed) << "/" << total << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculus of orthogonally additive operators on concrete vector lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalArgs global;
    app.add_option("--scenario", global.scenario_path, "scenario file (JSON)");
    app.add_option("--format", global.format, "output format")->check(CLI::IsMember({"table", "machine"}));

    std::string op_t, op_s, elem, formula, mode = "exact", eps = "1/1048576", set_name;
    std::size_t resolution = 8;
    bool check_flag = false;
    std::string out_path, in_path;
    SuiteOptions options;

    auto* c_eval = app.add_subcommand("eval", "apply an operator to an element");
    c_eval->add_option("operator", op_t)->required();
    c_eval->add_option("element", elem)->required();

    auto* c_calc = app.add_subcommand("calc", "pointwise lattice operations (join|meet|pos|neg|abs)");
    c_calc->add_option("formula", formula)->required();
    c_calc->add_option("T", op_t)->required();
    c_calc->add_option("S", op_s, "second operator (join/meet) or the element");
    c_calc->add_option("element", elem);
    c_calc->add_option("--resolution", resolution);

    auto* c_band = app.add_subcommand("band-project", "pi and sigma parts of Te against the band of S");
    c_band->add_option("T", op_t)->required();
    c_band->add_option("S", op_s)->required();
    c_band->add_option("element", elem)->required();
    c_band->add_option("--mode", mode)->check(CLI::IsMember({"exact", "grid"}));
    c_band->add_option("--eps", eps, "epsilon for grid mode");
    c_band->add_option("--resolution", resolution);

    auto* c_dec = app.add_subcommand("decompose", "laterally continuous / singular parts at an element");
    c_dec->add_option("T", op_t)->required();
    c_dec->add_option("element", elem)->required();
    c_dec->add_option("--resolution", resolution);

    auto* c_adm = app.add_subcommand("admissible", "inspect or check an admissible set");
    c_adm->add_option("set", set_name)->required();
    c_adm->add_flag("--check", check_flag, "verify both closure conditions on the samples");
    c_adm->add_option("--resolution", resolution);

    auto* c_verify = app.add_subcommand("verify", "run a randomized verification suite");
    auto* suite_opt = c_verify->add_option("--suite", options.suite, "one of th1|disjointness|band|onedim|lateral|all");
    suite_opt->required();
    auto* seed_opt = c_verify->add_option("--seed", options.seed, "RNG seed");
    c_verify->add_option("--trials", options.trials, "trial count override");
    c_verify->add_option("--resolution", options.resolution, "sequence resolution override");
    c_verify->add_flag("--inject-corruption", options.inject_corruption,
                       "run the negative control with a corrupted evaluator");
    c_verify->add_option("--out", out_path, "also write the report to a file");

    auto* c_report = app.add_subcommand("report", "render a machine-format report");
    c_report->add_option("--in", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_eval->parsed()) return cmd_eval(global, op_t, elem);
        if (c_calc->parsed()) return cmd_calc(global, formula, op_t, op_s, elem, resolution);
        if (c_band->parsed()) return cmd_band_project(global, op_t, op_s, elem, mode, eps, resolution);
        if (c_dec->parsed()) return cmd_decompose(global, op_t, elem, resolution);
        if (c_adm->parsed()) return cmd_admissible(global, set_name, check_flag, resolution);
        if (c_verify->parsed()) {
            if (global.format == "machine" && seed_opt->count() == 0) {
                std::cerr << "verify: --seed is required with --format machine\n";
                return 2;
            }
            return cmd_verify(global, options, out_path);
        }
        if (c_report->parsed()) return cmd_report(in_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
