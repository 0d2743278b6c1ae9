#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "equiblow/pipeline.hpp"

namespace test {

using namespace equiblow;

inline MultiPoly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

inline Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    Ideal out(r);
    for (const char* g : gens) out.add(parse_poly(g, r));
    return out;
}

inline Model corpus_model(const std::string& name) {
    return build_model(load_model_file(std::string(EQUIBLOW_CORPUS_DIR) + "/" + name + ".kb"));
}

inline MultiPoly random_poly(const RingPtr& r, std::mt19937_64& rng, int terms = 3, int max_exp = 2) {
    std::uniform_int_distribution<int> c(-4, 4);
    MultiPoly p(r);
    for (int t = 0; t < terms; ++t) {
        Monomial m(r->size());
        for (std::size_t i = 0; i < r->size(); ++i) m[i] = static_cast<Exponent>(rng() % (max_exp + 1));
        Rational q(c(rng), 1 + static_cast<int>(rng() % 3));
        q.canonicalize();
        p.add_term(m, q);
    }
    return p;
}

}  // namespace test
