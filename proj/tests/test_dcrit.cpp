#include "support.hpp"

#include "equiblow/oracles/oracles.hpp"

using namespace test;

TEST_CASE("worked cohomology dimensions") {
    auto x2y2 = corpus_model("x2y2").local;
    CHECK(cohomology_dims(four_term_at(x2y2, QVector{1, 0})) == std::array<long, 4>{0, 0, 0, 0});
    CHECK(cohomology_dims(four_term_at(x2y2, QVector{0, 0})) == std::array<long, 4>{1, 2, 2, 1});
    auto e2 = corpus_model("e2").local;
    CHECK(cohomology_dims(four_term_at(e2, QVector{1, 0, 0})) == std::array<long, 4>{0, 0, 0, 0});
    CHECK_THROWS_AS(four_term_at(e2, QVector{1, 1, 1}), PreconditionError);
}

TEST_CASE("reduced obstruction") {
    auto e2 = corpus_model("e2").local;
    auto red = reduced_obstruction_dim(e2, QVector{1, 0, 0});
    CHECK(red.dim == 0);
    CHECK(red.orbit_not_closed);
    auto r = make_ring({"x"});
    auto cubic = dcritical_chart(P("1/3*x^3", r), WeightMatrix({}, 1));
    CHECK(reduced_obstruction_dim(cubic, QVector{0}).dim == 1);
}

TEST_CASE("obstruction assignments against the lift oracle") {
    auto r = make_ring({"x"});
    WeightMatrix w0({}, 1);
    auto cubic = dcritical_chart(P("1/3*x^3", r), w0);
    SmallExtension dual{2, {{0, 1}}};
    auto ob = obstruction_assignment(cubic, dual);
    CHECK_FALSE(ob.vanishes);
    CHECK(ob.raw == QVector{1});
    CHECK_FALSE(oracle::lift_exists(cubic.ideal(), dual.series, 2));

    auto quad = dcritical_chart(P("1/2*x^2", r), w0);
    CHECK(obstruction_assignment(quad, SmallExtension{2, {{0, 0}}}).vanishes);
    CHECK_THROWS_AS(obstruction_assignment(quad, SmallExtension{2, {{0, 1}}}), PreconditionError);

    auto x2y2 = corpus_model("x2y2").local;
    SmallExtension e{1, {{1}, {0}}};
    CHECK(obstruction_assignment(x2y2, e).vanishes);
    CHECK(oracle::lift_exists(x2y2.ideal(), e.series, 1));
}

TEST_CASE("omega-equivalences and their lifts") {
    auto r = make_ring({"x", "y"});
    WeightMatrix w({{1, -1}}, 2);
    auto f = P("1/2*x^2*y^2", r), g = P("1/2*x^2*y^2 + x^4*y^4", r);
    auto data = construct_equivalence(f, g, w);
    auto mf = dcritical_chart(f, w), mg = dcritical_chart(g, w);
    CHECK(data.hint == P("1 + 4*x^2*y^2", r));
    CHECK(verify_omega_equivalence(mf, mg.section, data).ok());
    auto G = Subtorus::full(1);
    for (const auto& chart : model_charts(mf, G)) {
        OmegaData lifted{lift_morphism_to_blowup(data.a, mf, chart), lift_morphism_to_blowup(data.b, mf, chart),
                         chart.pullback(data.hint)};
        CHECK_MESSAGE(verify_omega_equivalence(blowup_local_model(mf, G, chart), blowup_section(mg, chart), lifted).ok(),
                      chart.name);
    }
    // unrelated sections are not equivalent
    auto other = dcritical_chart(P("1/2*x^2*y^2 + x*y", r), w);
    OmegaData zero{zero_matrix(r, 2, 2), zero_matrix(r, 2, 2), MultiPoly(r, 1)};
    CHECK_FALSE(verify_omega_equivalence(mf, other.section, zero).ok());
}

TEST_CASE("phi_ck compares cokernels") {
    auto small = corpus_model("x2y2").local;
    auto rb = make_ring({"x", "y", "u"});
    WeightMatrix wb({{1, -1, 0}}, 3);
    auto sq = phi_ck_at_point(small, dcritical_chart(P("1/2*x^2*y^2 + 1/2*u^2", rb), wb), QVector{0, 0});
    CHECK(sq.coker_small == 2);
    CHECK(sq.coker_big == 2);
    CHECK(sq.bijective);
    auto cu = phi_ck_at_point(small, dcritical_chart(P("1/2*x^2*y^2 + u^3", rb), wb), QVector{0, 0});
    CHECK(cu.coker_big == 3);
    CHECK(cu.well_defined);
    CHECK_FALSE(cu.bijective);
}
