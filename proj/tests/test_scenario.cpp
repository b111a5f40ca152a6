#include "uryson/scenario.hpp"

#include "uryson/sampling.hpp"
#include "uryson/suites.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace uryson;
using nlohmann::json;
using testutil::R;
using testutil::fv;
using testutil::ecs;

namespace {

json minimal_doc() {
    return json::parse(R"({
      "suites": {"seed": 7, "trials": 10, "resolution": 6, "max_dim": 3},
      "operators": {
        "T": {
          "domain": "finite:1",
          "codomain": 1,
          "kernel": [[{"breakpoints": [["0","0"]], "left_slope": "-1", "right_slope": "1"}]]
        }
      },
      "elements": {"x": {"coords": ["2"]}}
    })");
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        path = std::string("/tmp/uryson_test_") + std::to_string(::rand()) + ".json";
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("minimal scenario loads and evaluates") {
    Scenario s = scenario_from_json(minimal_doc());
    CHECK(s.params.seed == 7);
    CHECK(s.op("T").apply(s.element("x")) == fv({2}));
    CHECK_THROWS_AS(s.op("missing"), ScenarioError);
    CHECK_THROWS_AS(s.element("missing"), ScenarioError);
}

TEST_CASE("kernel entries must vanish at zero, named on rejection") {
    json doc = minimal_doc();
    doc["operators"]["T"]["kernel"][0][0]["breakpoints"] = {{"0", "1"}};
    CHECK_THROWS_WITH_AS(scenario_from_json(doc), doctest::Contains("(1,1)"), ScenarioError);
}

TEST_CASE("sequence operator with tail column round-trips through apply") {
    json doc = json::parse(R"({
      "operators": {
        "K": {
          "domain": "ecseq:2",
          "codomain": 1,
          "kernel": [[
            {"breakpoints": [["0","0"]], "left_slope": "-1", "right_slope": "1"},
            {"breakpoints": [["0","0"]], "left_slope": "0", "right_slope": "2"}
          ]],
          "tail": [{"breakpoints": [["0","0"]], "left_slope": "-1", "right_slope": "1"}]
        }
      },
      "elements": {"e": {"prefix": ["5", "1"], "tail": "3"}}
    })");
    Scenario s = scenario_from_json(doc);
    // |5| + 2*1 + |3| = 10
    CHECK(s.op("K").apply(s.element("e")) == fv({10}));
    CHECK(s.element("e") == ecs({5, 1}, 3));
}

TEST_CASE("admissible set references resolve against the scenario") {
    json doc = minimal_doc();
    doc["admissible_sets"]["D"] = {{"kind", "fragments_of"}, {"element", "x"}};
    doc["admissible_sets"]["C"] = {{"kind", "c00"}};
    doc["admissible_sets"]["N"] = {{"kind", "null_set"}, {"operator", "T"}};
    doc["admissible_sets"]["W"] = {{"kind", "whole"}, {"domain", "finite:1"}};
    Scenario s = scenario_from_json(doc);
    CHECK(s.admissible("D").contains(fv({2})));
    CHECK(s.admissible("C").laterally_dense());
    CHECK(s.admissible("N").contains(fv({0})));
    CHECK_FALSE(s.admissible("N").contains(fv({1})));
    CHECK(s.admissible("W").contains(fv({9})));

    json bad = minimal_doc();
    bad["admissible_sets"]["D"] = {{"kind", "fragments_of"}, {"element", "nope"}};
    CHECK_THROWS_AS(scenario_from_json(bad), ScenarioError);
    json bad2 = minimal_doc();
    bad2["admissible_sets"]["D"] = {{"kind", "mystery"}};
    CHECK_THROWS_WITH_AS(scenario_from_json(bad2), doctest::Contains("mystery"), ScenarioError);
}

TEST_CASE("save and reload is semantically identical") {
    Rng rng(113);
    Scenario s;
    s.operators.insert({"A", random_kernel_operator(rng, 3, 2, 5, false)});
    s.operators.insert({"B", random_ecseq_operator(rng, 2, 2, 4, true, true)});
    s.elements.insert({"x", fv({1, -2, 3})});
    s.elements.insert({"e", ecs({5}, 3)});
    s.admissible_specs.insert({"C", json{{"kind", "c00"}}});
    s.admissible_sets.insert({"C", AdmissibleSet::c00()});

    TempFile file("");
    save_scenario(s, file.path);
    Scenario t = load_scenario(file.path);

    CHECK(t.elements.at("x") == s.elements.at("x"));
    CHECK(t.elements.at("e") == s.elements.at("e"));
    CHECK(t.admissible("C").laterally_dense());
    // Operators agree on a probe grid, exactly.
    for (int k = 0; k < 40; ++k) {
        LatticeElement xa = random_element(rng, s.operators.at("A").domain());
        CHECK(t.operators.at("A").apply(xa) == s.operators.at("A").apply(xa));
        LatticeElement xb = random_element(rng, s.operators.at("B").domain(), 5);
        CHECK(t.operators.at("B").apply(xb) == s.operators.at("B").apply(xb));
    }
    // The representation itself survives byte-for-byte re-serialization.
    CHECK(scenario_to_json(t) == scenario_to_json(s));
}

TEST_CASE("parse errors carry line information") {
    TempFile file("{\n  \"operators\": {\n    oops\n}\n");
    try {
        load_scenario(file.path);
        FAIL("expected a ScenarioError");
    } catch (const ScenarioError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), ScenarioError);
}

TEST_CASE("piecewise-linear JSON round trip") {
    Rng rng(127);
    for (int k = 0; k < 30; ++k) {
        PiecewiseLinearFn f = random_kernel_entry(rng, 5, false);
        CHECK(pwl_from_json(pwl_to_json(f), "roundtrip") == f);
    }
    CHECK_THROWS_AS(pwl_from_json(json::parse("{}"), "x"), ScenarioError);
    CHECK_THROWS_AS(rational_from_json(json::parse("1.5"), "x"), ScenarioError);
}

TEST_CASE("command-line element forms") {
    Scenario s = scenario_from_json(minimal_doc());
    DomainDesc fin = DomainDesc::finite(2);
    DomainDesc seq = DomainDesc::ecseq(1);
    CHECK(parse_element_arg(s, DomainDesc::finite(1), "x") == fv({2}));  // named wins
    CHECK(parse_element_arg(s, fin, "0") == fv({0, 0}));
    CHECK(parse_element_arg(s, seq, "0") == ecs({}, 0));
    CHECK(parse_element_arg(s, fin, "1,-2/3") == LatticeElement::finite({R(1), R(-2, 3)}));
    CHECK(parse_element_arg(s, seq, "5;3") == ecs({5}, 3));
    CHECK(parse_element_arg(s, seq, "1,2") == ecs({1, 2}, 0));
    CHECK_THROWS_AS(parse_element_arg(s, fin, "1,zz"), ScenarioError);
}

TEST_CASE("suite runner rejects unknown suites and stays deterministic") {
    Scenario s = scenario_from_json(minimal_doc());
    SuiteOptions bad;
    bad.suite = "everything";
    CHECK_THROWS_AS(run_suite(s, bad), std::invalid_argument);

    SuiteOptions opt;
    opt.suite = "th1";
    opt.seed = 11;
    opt.trials = 6;
    Report a = run_suite(s, opt);
    Report b = run_suite(s, opt);
    CHECK(a.machine_text() == b.machine_text());
    CHECK(a.all_passed());
    CHECK(a.machine_text().find("\"seed\":11") != std::string::npos);
    // The named operator gets its own additivity record.
    CHECK(a.machine_text().find("additivity.T") != std::string::npos);
}
