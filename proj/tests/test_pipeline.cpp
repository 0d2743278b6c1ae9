#include "support.hpp"

using namespace test;

TEST_CASE("model file parsing") {
    auto f = parse_model_file(
        "# comment\nvariables = [\"x\", \"y\"]  # trailing\nweights = [[1, -1]]\npotential = \"x*y\"\n"
        "basepoint = [0, \"1/2\"]\n",
        "m");
    CHECK(f.variables == std::vector<std::string>{"x", "y"});
    CHECK(f.weights == IntMatrix{{1, -1}});
    CHECK(*f.basepoint == QVector{0, Rational(1, 2)});
    CHECK_THROWS_AS(parse_model_file("variables = [\"x\"]\nweights = [[1, 2]]\npotential = \"x\"\n"), ParseError);
    CHECK_THROWS_AS(parse_model_file("variables = [\"x\"]\nweights = [[1]]\n"), ParseError);
    CHECK_THROWS_AS(parse_model_file("variables = [\"x\"]\nweights = [[0]]\npotential = \"x\"\nideal = [\"x\"]\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_model_file("variables = [\"x\"]\ncolour = 3\n"), ParseError);
    CHECK_THROWS_AS(parse_model_file("variables = [\"x\"\n"), ParseError);
    CHECK_THROWS_AS(parse_model_file("variables = [\"x\"]\nvariables = [\"y\"]\n"), ParseError);
    auto bad_base = parse_model_file("variables = [\"x\", \"t\"]\nweights = [[1, 1]]\nideal = [\"x\"]\nbase_parameter = \"t\"\n");
    CHECK_THROWS_AS(build_model(bad_base), PreconditionError);
}

TEST_CASE("points") {
    CHECK(parse_point("1, -2, 3/4", 3) == QVector{1, -2, Rational(3, 4)});
    CHECK_THROWS_AS(parse_point("1,2", 3), ParseError);
}

TEST_CASE("sampling") {
    auto r = make_ring({"x", "y", "z"});
    auto gb = buchberger(I(r, {"z", "x*y"}));
    auto a = sample_points(gb, 20, Exec::Serial);
    auto b = sample_points(gb, 20, Exec::Parallel);
    CHECK(a == b);
    CHECK(a.size() == 20);
    for (const auto& p : a) CHECK(p[2] == 0);
    CHECK(finite_locus(buchberger(I(r, {"x^2", "y", "z - 1"}))));
    CHECK_FALSE(finite_locus(gb));
    CHECK(sample_points(buchberger(I(r, {"1"})), 5).empty());
}

TEST_CASE("blowup report follows the schema and is deterministic") {
    auto m = corpus_model("e2");
    ReportOptions opt;
    auto one = report_blowup(m, "blowup e2.kb", opt);
    opt.exec = Exec::Serial;
    auto two = report_blowup(m, "blowup e2.kb", opt);
    CHECK(dump_report(one.json) == dump_report(two.json));
    CHECK(one.ok());
    for (const char* key : {"model", "command", "charts", "ledger", "version"}) CHECK(one.json.contains(key));
    const auto& c = one.json["charts"][0];
    CHECK(c["name"] == "chart_x");
    for (const char* key : {"name", "vars", "weights", "ideal_gb", "unstable_gb", "checks", "verdicts"})
        CHECK(c.contains(key));
    CHECK(c["ideal_gb"] == Json({"z", "xi_x^2*T_y"}));
    CHECK(c["unstable_gb"] == Json({"T_y"}));
    CHECK(c["checks"]["coinc"] == true);
}

TEST_CASE("reports of E1 and the trivial action") {
    ReportOptions opt;
    auto e1 = report_blowup(corpus_model("e1"), "blowup", opt);
    for (const auto& c : e1.json["charts"]) CHECK(c["ideal_gb"] == Json({"1"}));
    CHECK(e1.json["ledger"]["notices"].dump().find("U-hat empty") != std::string::npos);
    auto triv = report_blowup(corpus_model("trivial"), "blowup", opt);
    CHECK(triv.json["charts"].empty());
    CHECK(triv.json["ledger"]["dense"] == true);
}
