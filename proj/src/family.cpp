#include "equiblow/family.hpp"

#include "equiblow/desing.hpp"

namespace equiblow {

namespace {

std::size_t require_base(const LocalModel& m) {
    if (!m.base) throw PreconditionError("model has no base parameter");
    return *m.base;
}

RingPtr drop(const RingPtr& ring, std::size_t i) {
    auto names = ring->names();
    names.erase(names.begin() + static_cast<long>(i));
    return make_ring(names);
}

}  // namespace

MultiPoly specialize(const MultiPoly& p, std::size_t base, const Rational& c, const RingPtr& target) {
    return p.substitute_value(base, c).rename_into(target);
}

LocalModel specialize(const LocalModel& m, const Rational& c) {
    const std::size_t t = require_base(m);
    if (!m.ancestry.empty()) throw UnsupportedError("specialize: only models on the original ambient space");
    LocalModel out;
    out.ring = drop(m.ring, t);
    IntMatrix rows = m.weights.rows();
    for (auto& r : rows) r.erase(r.begin() + static_cast<long>(t));
    out.weights = WeightMatrix(rows, out.ring->size());
    out.bundle = m.bundle;
    auto sp = [&](const MultiPoly& p) { return specialize(p, t, c, out.ring); };
    for (const auto& s : m.section) out.section.push_back(sp(s));
    out.divisor = sp(m.divisor);
    out.has_cofactor = m.has_cofactor;
    for (const auto& row : m.phi) {
        out.phi.emplace_back();
        for (const auto& e : row) out.phi.back().push_back(sp(e));
    }
    for (const auto& row : m.psi) {
        out.psi.emplace_back();
        for (const auto& e : row) out.psi.back().push_back(sp(e));
    }
    return out;
}

bool check_fixed_locus_flat(const LocalModel& m, std::string* certificate) {
    const std::size_t t = require_base(m);
    for (long x : m.weights.column(t))
        if (x != 0) return false;
    if (certificate) {
        std::string mv;
        for (auto i : moving_coordinates(m.weights, Subtorus::full(m.weights.k())))
            mv += (mv.empty() ? "" : ",") + m.ring->name(i);
        *certificate = "coordinate subspace {" + mv + " = 0} x base " + m.ring->name(t);
    }
    return true;
}

std::vector<std::pair<std::string, bool>> fiber_blowup_commutes(const LocalModel& m, const Rational& c) {
    const std::size_t t = require_base(m);
    LocalModel fiber = specialize(m, c);
    auto scan = enumerate_blowup_centers(m.weights, m.ideal());
    std::vector<std::pair<std::string, bool>> out;
    if (scan.centers.empty()) return out;
    const Subtorus& r = scan.centers.front();
    auto family_charts = model_charts(m, r);
    auto fiber_charts = model_charts(fiber, r);
    LocalModel mr = restrict_model(m, r), fr = restrict_model(fiber, r);
    for (const auto& fc : family_charts) {
        const BlowupChart* match = nullptr;
        for (const auto& c2 : fiber_charts)
            if (c2.name == fc.name) match = &c2;
        if (!match) {
            out.emplace_back(fc.name, false);
            continue;
        }
        auto fam = intrinsic_ideal(mr.ideal(), fc);
        auto fib = intrinsic_ideal(fr.ideal(), *match);
        Ideal moved(match->ring);
        for (const auto& g : fam.generators.generators()) moved.add(specialize(g, t, c, match->ring));
        bool ok = ideal_equal(moved, fib.generators);
        auto s1 = blowup_section(mr, fc);
        auto s2 = blowup_section(fr, *match);
        for (std::size_t j = 0; j < s1.size() && ok; ++j) ok = specialize(s1[j], t, c, match->ring) == s2[j];
        out.emplace_back(fc.name, ok);
    }
    return out;
}

}  // namespace equiblow
