#include "support.hpp"

using namespace test;

TEST_CASE("E1 blows up to nothing") {
    auto d = partial_desingularization(corpus_model("e1").local);
    REQUIRE(d.stages.size() == 1);
    for (const auto& c : d.stages[0].charts) {
        CHECK(c.coinc);
        CHECK(buchberger(c.model.ideal()).is_unit());
        CHECK(c.children.empty());
    }
}

TEST_CASE("coinc on every corpus model") {
    for (const char* name : {"e1", "e2", "cone", "x2y2", "family", "rank2", "nonreduced", "omega"}) {
        auto m = corpus_model(name).local;
        auto d = partial_desingularization(m);
        for (const auto& s : d.stages) {
            for (const auto& [chart, ok] : verify_coinc(m, s.center)) CHECK_MESSAGE(ok, name << " " << chart);
            for (const auto& c : s.charts) {
                CHECK(c.coinc);
                REQUIRE(c.check);
                CHECK_MESSAGE(c.check->ok(), name << " " << c.chart.name);
            }
        }
    }
}

TEST_CASE("trivial action is dense and has no stages") {
    auto d = partial_desingularization(corpus_model("trivial").local);
    CHECK(d.dense);
    CHECK(d.stages.empty());
}

TEST_CASE("embedding independence") {
    auto r = make_ring({"x", "y", "z"});
    auto rb = make_ring({"x", "y", "z", "u"});
    WeightMatrix w({{1, -1, 0}}, 3), wb({{1, -1, 0, 0}}, 4);
    auto rows = embedding_independence_check(I(r, {"y*z", "x*z", "x*y"}), w, I(rb, {"y*z", "x*z", "x*y", "u"}), wb, {"u"});
    REQUIRE(rows.size() == 2);
    for (const auto& [name, ok] : rows) CHECK_MESSAGE(ok, name);
    WeightMatrix bad({{1, -1, 0, 1}}, 4);
    CHECK_THROWS_AS(embedding_independence_check(I(r, {"x*y"}), w, I(rb, {"x*y", "u"}), bad, {"u"}), PreconditionError);
}

TEST_CASE("depth cap raises a budget error") {
    DesingOptions opt;
    opt.max_depth = 0;
    CHECK_THROWS_AS(partial_desingularization(corpus_model("e2").local, opt), BudgetExceeded);
}
