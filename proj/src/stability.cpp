#include "equiblow/stability.hpp"

#include <numeric>

#include "equiblow/lp.hpp"

namespace equiblow {

namespace {

long pairing(const IntRow& lambda, const IntRow& w) {
    long s = 0;
    for (std::size_t a = 0; a < lambda.size(); ++a) s += lambda[a] * w.at(a);
    return s;
}

// Smallest positive integer multiple of a rational vector, made primitive.
IntRow integral_direction(const QVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& x : v) {
        Integer e = x.get_num() * (den / x.get_den());
        g = gcd(g, e);
        z.push_back(e);
    }
    IntRow out;
    for (auto& e : z) {
        if (g != 0) e /= g;
        out.push_back(e.get_si());
    }
    return out;
}

IntRow lift_to_torus(const IntRow& lambda_r, const Subtorus& r) {
    IntRow out(r.ambient_rank(), 0);
    for (std::size_t j = 0; j < r.dim(); ++j)
        for (std::size_t a = 0; a < r.ambient_rank(); ++a) out[a] += lambda_r[j] * r.cochar()[j][a];
    return out;
}

// Some lambda in the cocharacters of R with <lambda, w> >= 1 on all weights.
std::optional<IntRow> destabilising(const std::vector<IntRow>& weights, std::size_t d) {
    LinearFeasibility lp(d);
    for (std::size_t a = 0; a < d; ++a) lp.set_free(a);
    for (const auto& w : weights) {
        QVector row(w.begin(), w.end());
        lp.add(row, LinearFeasibility::Rel::Ge, 1);
    }
    auto sol = lp.solve();
    if (!sol) return std::nullopt;
    return integral_direction(*sol);
}

}  // namespace

bool hm_fiber_semistable(const std::vector<IntRow>& support_weights) { return zero_in_hull(support_weights); }

std::optional<QVector> one_ps_limit(std::span<const Rational> point, const IntRow& lambda, const WeightMatrix& w) {
    if (point.size() != w.n()) throw PreconditionError("one_ps_limit: point does not match weights");
    QVector out(point.begin(), point.end());
    for (std::size_t i = 0; i < w.n(); ++i) {
        long p = pairing(lambda, w.column(i));
        if (p < 0 && point[i] != 0) return std::nullopt;
        if (p > 0) out[i] = 0;
    }
    return out;
}

StabilityVerdict chart_point_semistable(std::span<const Rational> point, const BlowupChart& chart) {
    if (point.size() != chart.ring->size()) throw PreconditionError("point does not lie on " + chart.name);
    const Subtorus& r = chart.center;
    auto rw = [&](std::size_t i) { return r.restrict(chart.parent_weights.column(i)); };
    StabilityVerdict v;
    if (point[chart.xi] == 0) {
        std::vector<IntRow> fiber{rw(chart.pivot)};
        for (auto i : chart.moving_indices())
            if (i != chart.pivot && point[i] != 0) fiber.push_back(rw(i));
        if (hm_fiber_semistable(fiber)) return v;
        v.semistable = false;
        v.reason = "fiber point on the exceptional divisor is Hilbert-Mumford unstable";
        if (auto l = destabilising(fiber, r.dim())) {
            v.lambda = lift_to_torus(*l, r);
            v.limit = one_ps_limit(point, *v.lambda, chart.weights);
        }
        return v;
    }
    // Off E: look for lambda flowing the parent point onto an unstable
    // fiber point.  M is the set of moving coordinates that vanish slowest.
    QVector parent = chart.map_point(point);
    const auto& w = chart.parent_weights;
    std::vector<std::size_t> fixed_support, moving_support;
    for (std::size_t i = 0; i < w.n(); ++i) {
        if (parent[i] == 0) continue;
        (chart.moving[i] ? moving_support : fixed_support).push_back(i);
    }
    const std::size_t k = w.k();
    const std::size_t ms = moving_support.size();
    for (unsigned long mask = 1; mask < (1UL << ms); ++mask) {
        std::vector<IntRow> fiber;
        for (std::size_t j = 0; j < ms; ++j)
            if (mask >> j & 1UL) fiber.push_back(rw(moving_support[j]));
        if (hm_fiber_semistable(fiber)) continue;
        LinearFeasibility lp(k + 1);  // lambda, mu
        for (std::size_t a = 0; a < k; ++a) lp.set_free(a);
        QVector mu_row(k + 1);
        mu_row[k] = 1;
        lp.add(mu_row, LinearFeasibility::Rel::Ge, 1);
        for (auto i : fixed_support) {
            QVector row(k + 1);
            for (std::size_t a = 0; a < k; ++a) row[a] = w(a, i);
            lp.add(row, LinearFeasibility::Rel::Ge, 0);
        }
        for (std::size_t j = 0; j < ms; ++j) {
            QVector row(k + 1);
            for (std::size_t a = 0; a < k; ++a) row[a] = w(a, moving_support[j]);
            row[k] = -1;
            bool in_m = mask >> j & 1UL;
            lp.add(row, in_m ? LinearFeasibility::Rel::Eq : LinearFeasibility::Rel::Ge, in_m ? 0 : 1);
        }
        auto sol = lp.solve();
        if (!sol) continue;
        QVector lam(sol->begin(), sol->begin() + static_cast<long>(k));
        v.semistable = false;
        v.reason = "orbit closure meets an unstable point of the exceptional divisor";
        v.lambda = integral_direction(lam);
        v.limit = one_ps_limit(point, *v.lambda, chart.weights);
        return v;
    }
    return v;
}

StabilityVerdict point_semistable(std::span<const Rational> point, std::span<const BlowupChart> ancestry) {
    QVector p(point.begin(), point.end());
    for (std::size_t level = ancestry.size(); level-- > 0;) {
        auto v = chart_point_semistable(p, ancestry[level]);
        if (!v.semistable) {
            v.stage = level;
            return v;
        }
        p = ancestry[level].map_point(p);
    }
    return {};
}

Ideal unstable_ideal(const BlowupChart& chart) {
    if (chart.center.dim() != 1) throw UnsupportedError("unsupported: unstable ideal needs a rank-one center; use point_semistable");
    auto rw = [&](std::size_t i) { return chart.center.restrict(chart.parent_weights.column(i))[0]; };
    const long wk = rw(chart.pivot);
    Ideal out(chart.ring);
    for (auto i : chart.moving_indices()) {
        if (i == chart.pivot) continue;
        if ((rw(i) > 0) != (wk > 0)) out.add(MultiPoly::variable(chart.ring, i));
    }
    return out;
}

Ideal unstable_ideal(std::span<const BlowupChart> ancestry) {
    if (ancestry.empty()) throw PreconditionError("unstable_ideal: empty tower");
    Ideal acc(ancestry[0].parent, {MultiPoly(ancestry[0].parent, 1)});
    for (const auto& chart : ancestry) {
        Ideal pulled(chart.ring);
        for (const auto& g : acc.generators()) pulled.add(chart.pullback(g));
        acc = intersect(unstable_ideal(chart), pulled);
    }
    return acc;
}

bool SemistableLocus::contains(std::span<const Rational> point) const {
    for (const auto& g : scheme.basis)
        if (g.evaluate(point) != 0) return false;
    for (const auto& g : unstable.basis)
        if (g.evaluate(point) != 0) return true;
    return false;
}

SemistableLocus semistable_locus(const Ideal& intrinsic, std::span<const BlowupChart> ancestry) {
    return {buchberger(intrinsic), buchberger(unstable_ideal(ancestry))};
}

}  // namespace equiblow
