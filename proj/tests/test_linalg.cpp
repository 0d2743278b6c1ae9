#include "support.hpp"

#include "equiblow/lp.hpp"
#include "equiblow/oracles/oracles.hpp"

using namespace test;

TEST_CASE("rank, nullspace, solve") {
    QMatrix a(3, 3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(a) == 2);
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK((a * ns[0]) == QVector(3, 0));
    auto x = solve(a, QVector{6, 12, 2});
    REQUIRE(x);
    CHECK((a * *x) == (QVector{6, 12, 2}));
    CHECK_FALSE(solve(a, QVector{1, 0, 0}));
}

TEST_CASE("rank agrees with the Bareiss oracle") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        QMatrix a(rows, cols);
        std::vector<std::vector<Rational>> b(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Rational q(static_cast<long>(rng() % 5) - 2, 1 + rng() % 2);
                q.canonicalize();
                b[i][j] = a(i, j) = q;
            }
        CHECK(rank(a) == oracle::bareiss_rank(b));
    }
}

TEST_CASE("hermite form and integer kernel") {
    CHECK(hermite_rows({{2, 4}, {1, 3}}, 2) == IntMatrix{{1, 1}, {0, 2}});
    auto k = integer_kernel({{1, -1, 0}}, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] == v[1]);
    CHECK(is_primitive({{1, 0}}, 2));
    CHECK_FALSE(is_primitive({{2, 0}}, 2));
    CHECK_FALSE(is_primitive({{1, 1}, {1, -1}}, 2));
}

TEST_CASE("exact feasibility") {
    QMatrix a(1, 2, {{1, 1}});
    CHECK(nonnegative_solution(a, {1}));
    CHECK_FALSE(nonnegative_solution(a, {-1}));
    LinearFeasibility lp(2);
    lp.set_free(0);
    lp.add({1, 1}, LinearFeasibility::Rel::Eq, 0);
    lp.add({0, 1}, LinearFeasibility::Rel::Ge, 1);
    auto s = lp.solve();
    REQUIRE(s);
    CHECK((*s)[0] == -(*s)[1]);
    lp.add({0, 1}, LinearFeasibility::Rel::Le, Rational(1, 2));
    CHECK_FALSE(lp.solve());
}
