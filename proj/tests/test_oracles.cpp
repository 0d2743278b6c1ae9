#include "support.hpp"

#include "equiblow/oracles/oracles.hpp"

using namespace test;

TEST_CASE("limit oracles on small cases") {
    CHECK(oracle::orbit_closed_by_limits({{1}, {-1}}, 1));
    CHECK_FALSE(oracle::orbit_closed_by_limits({{1}, {0}}, 1));
    CHECK(oracle::orbit_closed_by_limits({}, 1));
    CHECK(oracle::fiber_semistable_by_limits({{1}, {-2}}, 1));
    CHECK_FALSE(oracle::fiber_semistable_by_limits({{1, 0}, {1, 1}}, 2));
}

TEST_CASE("lift oracle") {
    auto r = make_ring({"x", "y"});
    // node xy = 0: the tangent (1, 1) at the origin does not lift to order 2
    auto node = I(r, {"x*y"});
    CHECK(oracle::lift_exists(node, {{0, 1}, {0, 0}}, 2));
    CHECK_FALSE(oracle::lift_exists(node, {{0, 1}, {0, 1}}, 2));
    CHECK(oracle::lift_exists(node, {{1}, {0}}, 1));
}

TEST_CASE("random homogeneous polynomials have the requested weight") {
    auto r = make_ring({"a", "b", "c"});
    WeightMatrix w({{1, -1, 2}}, 3);
    oracle::Weights cols{{1}, {-1}, {2}};
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        auto p = oracle::random_homogeneous(r, cols, {1}, 5, rng);
        if (p.is_zero()) continue;
        auto hw = homogeneous_weight(p, w, Subtorus::full(1));
        REQUIRE(hw);
        CHECK(*hw == IntRow{1});
    }
}
