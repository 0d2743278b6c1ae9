#include "support.hpp"

using namespace test;

TEST_CASE("reduced degrevlex basis") {
    auto r = make_ring({"x", "y"});
    auto gb = buchberger(I(r, {"y - x^2", "x*y"}));
    CHECK(gb.strings() == std::vector<std::string>{"y^2", "x*y", "x^2 - y"});
    CHECK(spolynomials_reduce_to_zero(gb));
    // lex with y > x gives the elimination form
    auto ryx = make_ring({"y", "x"});
    CHECK(buchberger(I(ryx, {"y - x^2", "x*y"}), MonomialOrder::lex()).strings() ==
          std::vector<std::string>{"x^3", "-x^2 + y"});
}

TEST_CASE("chart ideal of E2") {
    auto r = make_ring({"xi_x", "T_y", "z"});
    auto gb = buchberger(I(r, {"T_y*z", "z", "xi_x^2*T_y"}));
    CHECK(gb.strings() == std::vector<std::string>{"z", "xi_x^2*T_y"});
}

TEST_CASE("membership, unit ideal, certificates") {
    auto r = make_ring({"x", "y"});
    CHECK_FALSE(is_unit_ideal(I(r, {"x", "y"})));
    CHECK(is_unit_ideal(I(r, {"x", "x + 1"})));
    auto big = I(r, {"x^2*y^4", "x^3*y^3", "x^4*y^2"});
    auto q = lift_certificate(P("x^4*y^4", r), big);
    REQUIRE(q);
    MultiPoly sum(r);
    for (std::size_t i = 0; i < q->size(); ++i) sum += (*q)[i] * big.generators()[i];
    CHECK(sum == P("x^4*y^4", r));
    CHECK_FALSE(lift_certificate(P("x*y", r), big));
    CHECK(ideal_contains(I(r, {"x", "y"}), big));
}

TEST_CASE("saturation") {
    auto r = make_ring({"x", "y"});
    auto h = P("1 + 4*x^2*y^2", r);
    auto s = saturate(I(r, {"x*y^2*(1 + 4*x^2*y^2)", "x^2*y*(1 + 4*x^2*y^2)"}), h);
    CHECK(buchberger(s).strings() == std::vector<std::string>{"x*y^2", "x^2*y"});
    CHECK(ideal_equal(saturate(s, h), s));
    CHECK(is_unit_ideal(saturate(I(r, {"x^3"}), P("x", r))));
}

TEST_CASE("saturation is idempotent on random ideals") {
    auto r = make_ring({"a", "b"});
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Ideal i(r, {random_poly(r, rng), random_poly(r, rng)});
        auto h = random_poly(r, rng, 2, 1);
        if (h.is_zero()) continue;
        auto s = saturate(i, h);
        CHECK(ideal_equal(saturate(s, h), s));
        CHECK(ideal_contains(s, i));
    }
}

TEST_CASE("elimination and intersection") {
    auto r = make_ring({"x", "y"});
    std::vector<std::string> v{"x"};
    auto e = eliminate(I(r, {"x - y", "x + y"}), v);
    CHECK(buchberger(e).strings() == std::vector<std::string>{"y"});
    CHECK(e.ring()->names() == std::vector<std::string>{"y"});
    auto meet = intersect(I(r, {"x"}), I(r, {"y"}));
    CHECK(buchberger(meet).strings() == std::vector<std::string>{"x*y"});
}

TEST_CASE("generator order and redundancy do not change the basis") {
    auto r = make_ring({"a", "b", "c"});
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        std::vector<MultiPoly> g{random_poly(r, rng), random_poly(r, rng), random_poly(r, rng)};
        auto gb = buchberger(Ideal(r, g));
        CHECK(spolynomials_reduce_to_zero(gb));
        auto g2 = g;
        std::shuffle(g2.begin(), g2.end(), rng);
        g2.push_back(g[0] * g[1] + g[2]);
        CHECK(buchberger(Ideal(r, g2)) == gb);
    }
}

TEST_CASE("budget is enforced") {
    auto r = make_ring({"x", "y"});
    CHECK_THROWS_AS(buchberger(I(r, {"x^2 - y", "x*y - 1"}), MonomialOrder::degrevlex(), Budget{1, 40}),
                    BudgetExceeded);
    CHECK_THROWS_AS(buchberger(I(r, {"x^50 - y"}), MonomialOrder::degrevlex(), Budget{2000, 40}), BudgetExceeded);
}
