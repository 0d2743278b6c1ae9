#include "support.hpp"

using namespace test;

TEST_CASE("d-critical chart of xyz") {
    auto r = make_ring({"x", "y", "z"});
    WeightMatrix w({{1, -1, 0}}, 3);
    auto m = dcritical_chart(P("x*y*z", r), w);
    CHECK(m.bundle.labels == std::vector<std::string>{"dx", "dy", "dz"});
    CHECK(m.section[2] == P("x*y", r));
    CHECK(check_weak_local_model(m).ok());
    CHECK_THROWS_AS(dcritical_chart(P("x*z", r), w), PreconditionError);
}

TEST_CASE("blown-up model of E2 on chart_x") {
    auto m = corpus_model("e2").local;
    auto g = Subtorus::full(1);
    auto charts = model_charts(m, g);
    auto b = blowup_local_model(m, g, charts[0]);
    const auto& rr = b.ring;
    CHECK(b.bundle.twist == 2);
    CHECK(b.bundle.labels == std::vector<std::string>{"xi_x*dx", "xi_x*dy", "dz"});
    CHECK(b.phi[0][0] == P("1", rr));
    CHECK(b.phi[0][1] == P("-T_y", rr));
    CHECK(b.phi[0][2].is_zero());
    CHECK(b.psi[0][0] == P("xi_x", rr));
    CHECK(b.psi[0][1] == P("-T_y", rr));
    CHECK(b.psi[2][2] == P("xi_x^2", rr));
    CHECK(check_weak_local_model(b).ok());
    CHECK(multiply(b.phi, b.psi) == b.sigma());
}

TEST_CASE("complex property at sampled points of every corpus model and stage") {
    for (const char* name : {"e1", "e2", "cone", "x2y2", "family", "trivial", "rank2", "omega"}) {
        auto m = corpus_model(name).local;
        auto t = complex_check(m, 20);
        CHECK_MESSAGE(t.ok(), name);
        CHECK_MESSAGE((t.points >= 20 || t.finite), name);
        auto d = partial_desingularization(m);
        for (const auto& s : d.stages)
            for (const auto& c : s.charts) {
                auto tc = complex_check(c.model, 20);
                CHECK_MESSAGE(tc.ok(), name << " " << c.chart.name);
                CHECK_MESSAGE((tc.points >= 20 || tc.finite), name << " " << c.chart.name);
            }
    }
}
