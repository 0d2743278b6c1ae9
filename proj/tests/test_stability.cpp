#include "support.hpp"

#include "equiblow/oracles/oracles.hpp"
#include "equiblow/stability.hpp"

using namespace test;

namespace {

std::vector<BlowupChart> first_charts(const char* name) {
    auto m = corpus_model(name).local;
    return model_charts(m, Subtorus::full(m.weights.k()));
}

}  // namespace

TEST_CASE("E2 chart_x verdicts") {
    auto c = first_charts("e2")[0];
    std::vector<BlowupChart> tower{c};
    CHECK(point_semistable(QVector{0, 1, 0}, tower).semistable);
    CHECK(point_semistable(QVector{0, 1, 5}, tower).semistable);
    auto v = point_semistable(QVector{1, 0, 0}, tower);
    CHECK_FALSE(v.semistable);
    REQUIRE(v.lambda);
    CHECK(*v.lambda == IntRow{1});
    REQUIRE(v.limit);
    CHECK(*v.limit == QVector{0, 0, 0});
    CHECK(buchberger(unstable_ideal(c)).strings() == std::vector<std::string>{"T_y"});
}

TEST_CASE("one-parameter limits") {
    WeightMatrix w({{1, -1, 0}}, 3);
    auto lim = one_ps_limit(QVector{2, 0, 3}, {1}, w);
    REQUIRE(lim);
    CHECK(*lim == QVector{0, 0, 3});
    CHECK_FALSE(one_ps_limit(QVector{0, 1, 0}, {1}, w));
}

TEST_CASE("fiber test agrees with the limit oracle") {
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                std::vector<IntRow> ws{{a}, {b}, {c}};
                CHECK(hm_fiber_semistable(ws) == oracle::fiber_semistable_by_limits(ws, 1));
            }
    CHECK(hm_fiber_semistable({{1, 0}, {-1, 1}, {0, -1}}));
    CHECK_FALSE(hm_fiber_semistable({{1, 0}, {0, 1}}));
}

TEST_CASE("unstable ideal and point verdicts describe the same locus") {
    for (const char* name : {"e1", "e2", "x2y2", "cone"}) {
        for (const auto& c : first_charts(name)) {
            auto gb = buchberger(unstable_ideal(c));
            std::vector<BlowupChart> tower{c};
            const std::size_t n = c.ring->size();
            std::vector<long> e(n, -2);
            for (;;) {
                QVector p(e.begin(), e.end());
                bool in_ideal = std::all_of(gb.basis.begin(), gb.basis.end(),
                                            [&](const MultiPoly& g) { return g.evaluate(p) == 0; });
                CHECK_MESSAGE(point_semistable(p, tower).semistable == !in_ideal, name << " " << c.name);
                std::size_t i = 0;
                while (i < n && e[i] == 2) e[i++] = -2;
                if (i == n) break;
                ++e[i];
            }
        }
    }
}

TEST_CASE("rank-two centers have no unstable ideal") {
    auto c = first_charts("rank2")[0];
    CHECK_THROWS_AS(unstable_ideal(c), UnsupportedError);
    std::vector<BlowupChart> tower{c};
    CHECK_NOTHROW(point_semistable(QVector{0, 1, 1}, tower));
}
