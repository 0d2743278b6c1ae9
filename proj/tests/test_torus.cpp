#include "support.hpp"

#include "equiblow/oracles/oracles.hpp"

using namespace test;

TEST_CASE("subtori are primitive and canonical") {
    CHECK(Subtorus({{1, 2}}, 2) == Subtorus({{-1, -2}}, 2));
    CHECK_THROWS_AS(Subtorus({{2, 0}}, 2), PreconditionError);
    CHECK(Subtorus::full(2).dim() == 2);
}

TEST_CASE("isotypic decomposition and Reynolds") {
    auto r = make_ring({"x", "y", "z"});
    WeightMatrix w({{1, -1, 0}}, 3);
    auto g = Subtorus::full(1);
    auto f = P("x*y + x + z^2 + y^2*x", r);
    auto pieces = isotypic_decompose(f, w, g);
    MultiPoly sum(r);
    for (const auto& p : pieces) sum += p.part;
    CHECK(sum == f);
    CHECK(reynolds(f, w, g) == P("x*y + z^2", r));
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        auto p = random_poly(r, rng, 4);
        auto once = reynolds(p, w, g);
        CHECK(reynolds(once, w, g) == once);
        CHECK((once.is_zero() || is_invariant(once, w)));
    }
}

TEST_CASE("stabilisers and closed orbits") {
    WeightMatrix w({{1, -1, 0}}, 3);
    std::vector<std::size_t> z{2}, xy{0, 1}, x{0};
    CHECK(stabilizer_subtorus(z, w) == Subtorus::full(1));
    CHECK(stabilizer_subtorus(xy, w).is_trivial());
    CHECK(orbit_is_closed(xy, w));
    CHECK_FALSE(orbit_is_closed(x, w));
    CHECK(zero_in_hull({{1}, {-2}}));
    CHECK_FALSE(zero_in_hull({{1}, {2}}));
}

TEST_CASE("closed-orbit rule agrees with limits on rank-two samples") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        IntMatrix rows(2, IntRow(3));
        for (auto& row : rows)
            for (auto& v : row) v = static_cast<long>(rng() % 5) - 2;
        WeightMatrix w(rows, 3);
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::vector<std::size_t> s;
            oracle::Weights ws;
            for (std::size_t i = 0; i < 3; ++i)
                if (mask >> i & 1U) s.push_back(i), ws.push_back(w.column(i));
            CHECK(orbit_is_closed(s, w) == oracle::orbit_closed_by_limits(ws, 2));
        }
    }
}

TEST_CASE("centers of the worked examples") {
    auto r = make_ring({"x", "y", "z"});
    WeightMatrix w({{1, -1, 0}}, 3);
    auto scan = enumerate_blowup_centers(w, I(r, {"y*z", "x*z", "x*y"}));
    REQUIRE(scan.centers.size() == 1);
    CHECK(scan.centers[0] == Subtorus::full(1));
    CHECK_FALSE(scan.dense);
    auto trivial = enumerate_blowup_centers(WeightMatrix({{0, 0, 0}}, 3), I(r, {"x*y"}));
    CHECK(trivial.centers.empty());
    CHECK(trivial.dense);
    CHECK(support_realized(I(r, {"x*y"}), std::vector<std::size_t>{0, 2}));
    CHECK_FALSE(support_realized(I(r, {"x*y"}), std::vector<std::size_t>{0, 1}));
}

TEST_CASE("serial and parallel center scans agree") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 3 + rng() % 2;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        auto r = make_ring(names);
        IntMatrix rows(1 + rng() % 2, IntRow(n));
        for (auto& row : rows)
            for (auto& v : row) v = static_cast<long>(rng() % 5) - 2;
        WeightMatrix w(rows, n);
        oracle::Weights cols;
        for (std::size_t i = 0; i < n; ++i) cols.push_back(w.column(i));
        Ideal ideal(r, {oracle::random_homogeneous(r, cols, std::vector<long>(rows.size(), 0), 4, rng)});
        if (ideal.empty()) continue;
        auto a = enumerate_blowup_centers(w, ideal, {}, Exec::Serial);
        auto b = enumerate_blowup_centers(w, ideal, {}, Exec::Parallel);
        CHECK(a.centers == b.centers);
        CHECK(a.supports == b.supports);
        CHECK(a.dense == b.dense);
    }
}
