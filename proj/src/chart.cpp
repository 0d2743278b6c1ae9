#include "equiblow/chart.hpp"

#include <algorithm>
#include <set>

namespace equiblow {

namespace {

std::string fresh(std::string base, const std::set<std::string>& taken) {
    while (taken.count(base)) base += "_";
    return base;
}

bool nonzero(const IntRow& w) {
    return std::any_of(w.begin(), w.end(), [](long x) { return x != 0; });
}

}  // namespace

MultiPoly BlowupChart::pullback(const MultiPoly& p) const {
    if (!p.is_zero() && !same_ring(p.ring(), parent)) throw PreconditionError("pullback: polynomial not on the parent ring");
    if (p.is_zero()) return MultiPoly(ring);
    return p.substitute(substitution, ring);
}

std::vector<std::size_t> BlowupChart::moving_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < moving.size(); ++i)
        if (moving[i]) out.push_back(i);
    return out;
}

QVector BlowupChart::map_point(std::span<const Rational> point) const {
    QVector out;
    for (const auto& s : substitution) out.push_back(s.evaluate(point));
    return out;
}

std::vector<BlowupChart> make_charts(const RingPtr& ring, const WeightMatrix& w, const Subtorus& r) {
    if (ring->size() != w.n()) throw PreconditionError("make_charts: weight matrix does not match ring");
    if (r.ambient_rank() != w.k()) throw PreconditionError("make_charts: subtorus of a different torus");
    auto mv = moving_coordinates(w, r);
    if (mv.empty()) throw PreconditionError("center equals ambient; blowup empty");
    std::vector<bool> moving(w.n(), false);
    for (auto i : mv) moving[i] = true;

    std::vector<BlowupChart> charts;
    for (auto k : mv) {
        BlowupChart c;
        c.parent = ring;
        c.center = r;
        c.parent_weights = w;
        c.pivot = k;
        c.xi = k;
        c.moving = moving;
        c.name = "chart_" + ring->name(k);

        std::set<std::string> taken;
        for (std::size_t i = 0; i < w.n(); ++i)
            if (!moving[i]) taken.insert(ring->name(i));
        std::vector<std::string> names(w.n());
        for (std::size_t i = 0; i < w.n(); ++i) {
            if (!moving[i]) {
                names[i] = ring->name(i);
                continue;
            }
            names[i] = fresh((i == k ? "xi_" : "T_") + ring->name(i), taken);
            taken.insert(names[i]);
        }
        c.ring = make_ring(names);

        IntMatrix rows(w.k(), IntRow(w.n(), 0));
        for (std::size_t a = 0; a < w.k(); ++a)
            for (std::size_t i = 0; i < w.n(); ++i)
                rows[a][i] = (moving[i] && i != k) ? w(a, i) - w(a, k) : w(a, i);
        c.weights = WeightMatrix(std::move(rows), w.n());

        MultiPoly xi = MultiPoly::variable(c.ring, k);
        for (std::size_t i = 0; i < w.n(); ++i) {
            MultiPoly v = MultiPoly::variable(c.ring, i);
            c.substitution.push_back(moving[i] && i != k ? xi * v : v);
        }
        charts.push_back(std::move(c));
    }
    return charts;
}

MultiPoly exceptional_divide(const MultiPoly& p, const BlowupChart& chart) {
    if (p.is_zero()) return p;
    if (min_exponent(p, chart.xi) < 1) {
        throw TheoremCheckFailure("exceptional-divisibility",
                                  "pullback " + p.to_string() + " of a moving piece is not divisible by " +
                                      chart.ring->name(chart.xi) + " on " + chart.name);
    }
    return divide_by_variable(p, chart.xi, 1);
}

bool is_invariant_ideal(const Ideal& ideal, const WeightMatrix& w, const Subtorus& r) {
    bool homogeneous = true;
    for (const auto& g : ideal.generators())
        if (isotypic_decompose(g, w, r).size() > 1) homogeneous = false;
    if (homogeneous) return true;
    auto gb = buchberger(ideal);
    for (const auto& g : ideal.generators())
        for (const auto& piece : isotypic_decompose(g, w, r))
            if (!contains(gb, piece.part)) return false;
    return true;
}

IntrinsicIdeal intrinsic_ideal(const Ideal& ideal, const BlowupChart& chart) {
    const auto& w = chart.parent_weights;
    if (!is_invariant_ideal(ideal, w, chart.center))
        throw PreconditionError("ideal is not invariant under the center subtorus");
    IntrinsicIdeal out{Ideal(chart.ring), {}, 0};
    for (const auto& g : ideal.generators()) {
        for (const auto& piece : isotypic_decompose(g, w, chart.center)) {
            MultiPoly pb = chart.pullback(piece.part);
            if (nonzero(piece.weight)) {
                pb = exceptional_divide(pb, chart);
                ++out.divisions;
            }
            out.generators.add(pb);
        }
    }
    out.basis = buchberger(out.generators);
    return out;
}

bool charts_glue(const Ideal& on_a, const BlowupChart& a, const Ideal& on_b, const BlowupChart& b) {
    if (a.pivot == b.pivot) return true;
    const std::size_t l = b.pivot;
    std::string s = "_inv";
    while (a.ring->index_of(s)) s += "_";
    auto names = a.ring->names();
    names.push_back(s);
    RingPtr ext = make_ring(names);
    MultiPoly sv = MultiPoly::variable(ext, names.size() - 1);
    MultiPoly tl = MultiPoly::variable(ext, l);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < b.ring->size(); ++i) {
        MultiPoly v = MultiPoly::variable(ext, i);
        if (!a.moving[i]) images.push_back(v);
        else if (i == l) images.push_back(MultiPoly::variable(ext, a.pivot) * tl);
        else if (i == a.pivot) images.push_back(sv);
        else images.push_back(v * sv);
    }
    Ideal moved(ext);
    for (const auto& g : on_b.generators()) moved.add(g.substitute(images, ext));
    moved.add(sv * tl - MultiPoly(ext, 1));
    Ideal from_b = eliminate(moved, std::vector<std::string>{s});
    Ideal back(a.ring);
    for (const auto& g : from_b.generators()) back.add(g.rename_into(a.ring));
    Ideal local_a = saturate(on_a, MultiPoly::variable(a.ring, l));
    return ideal_equal(back, local_a);
}

}  // namespace equiblow
