#include "support.hpp"

using namespace test;

TEST_CASE("fibers of xy(z - t)") {
    auto fam = corpus_model("family").local;
    auto fiber = specialize(fam, 0);
    CHECK(fiber.ring->names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(ideal_equal(fiber.ideal(), corpus_model("e2").local.ideal()));
    for (long c : {0L, 1L, -2L, 5L}) {
        auto rows = fiber_blowup_commutes(fam, Rational(c));
        CHECK(rows.size() == 2);
        for (const auto& [name, ok] : rows) CHECK_MESSAGE(ok, name << " at " << c);
    }
    std::string cert;
    CHECK(check_fixed_locus_flat(fam, &cert));
    CHECK(cert.find("x,y") != std::string::npos);
}

TEST_CASE("models without a base parameter are rejected") {
    CHECK_THROWS_AS(specialize(corpus_model("e2").local, 0), PreconditionError);
}
