#include "support.hpp"

using namespace test;

TEST_CASE("charts of the blowup along the fixed locus") {
    auto r = make_ring({"x", "y", "z"});
    WeightMatrix w({{1, -1, 0}}, 3);
    auto charts = make_charts(r, w, Subtorus::full(1));
    REQUIRE(charts.size() == 2);
    CHECK(charts[0].name == "chart_x");
    CHECK(charts[0].ring->names() == std::vector<std::string>{"xi_x", "T_y", "z"});
    CHECK(charts[0].weights.rows() == IntMatrix{{1, -2, 0}});
    CHECK(charts[0].pullback(P("x*y*z", r)).to_string() == "xi_x^2*T_y*z");
    CHECK(charts[1].ring->names() == std::vector<std::string>{"T_x", "xi_y", "z"});
    CHECK(charts[0].map_point(QVector{2, 3, 1}) == QVector{2, 6, 1});
    CHECK_THROWS_AS(exceptional_divide(charts[0].pullback(P("z", r)), charts[0]), TheoremCheckFailure);
    CHECK_THROWS_AS(make_charts(r, WeightMatrix({{0, 0, 0}}, 3), Subtorus::full(1)), PreconditionError);
}

TEST_CASE("intrinsic ideal of E2 and gluing") {
    auto r = make_ring({"x", "y", "z"});
    WeightMatrix w({{1, -1, 0}}, 3);
    auto ideal = I(r, {"y*z", "x*z", "x*y"});
    CHECK(is_invariant_ideal(ideal, w, Subtorus::full(1)));
    auto charts = make_charts(r, w, Subtorus::full(1));
    auto a = intrinsic_ideal(ideal, charts[0]);
    auto b = intrinsic_ideal(ideal, charts[1]);
    CHECK(a.basis.strings() == std::vector<std::string>{"z", "xi_x^2*T_y"});
    CHECK(b.basis.strings() == std::vector<std::string>{"z", "T_x*xi_y^2"});
    CHECK(a.divisions == 2);
    CHECK(charts_glue(a.generators, charts[0], b.generators, charts[1]));
    CHECK(charts_glue(b.generators, charts[1], a.generators, charts[0]));
    auto wrong = I(charts[1].ring, {"z"});
    CHECK_FALSE(charts_glue(a.generators, charts[0], wrong, charts[1]));
}

TEST_CASE("generating set does not matter") {
    auto r = make_ring({"x", "y", "z"});
    WeightMatrix w({{1, -1, 0}}, 3);
    auto c = make_charts(r, w, Subtorus::full(1))[0];
    auto one = intrinsic_ideal(I(r, {"y*z", "x*z", "x*y"}), c);
    auto two = intrinsic_ideal(I(r, {"y*z + x*y", "x*z", "x*y", "x^2*z"}), c);
    CHECK(one.basis == two.basis);
}

TEST_CASE("non-invariant ideals are rejected") {
    auto r = make_ring({"x", "y"});
    WeightMatrix w({{1, -1}}, 2);
    CHECK_FALSE(is_invariant_ideal(I(r, {"x + y"}), w, Subtorus::full(1)));
}
