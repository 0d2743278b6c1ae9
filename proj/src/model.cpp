#include "equiblow/model.hpp"

#include <algorithm>

#include "equiblow/stability.hpp"

namespace equiblow {

namespace {

bool nonzero(const IntRow& w) {
    return std::any_of(w.begin(), w.end(), [](long x) { return x != 0; });
}

IntRow negate(IntRow w) {
    for (auto& x : w) x = -x;
    return w;
}

std::vector<std::size_t> tangent_of(std::size_t n, std::optional<std::size_t> base) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < n; ++i)
        if (!base || *base != i) t.push_back(i);
    return t;
}

void require_base_weight_zero(const WeightMatrix& w, std::optional<std::size_t> base) {
    if (!base) return;
    for (std::size_t a = 0; a < w.k(); ++a)
        if (w(a, *base) != 0) throw PreconditionError("base parameter must have weight zero");
}

MultiPoly divide_xi_power(const MultiPoly& p, std::size_t xi, Exponent k, const char* what) {
    if (p.is_zero()) return p;
    if (min_exponent(p, xi) < k) {
        throw TheoremCheckFailure(what, p.to_string() + " is not divisible by " + p.ring()->name(xi) + "^" +
                                            std::to_string(k));
    }
    return divide_by_variable(p, xi, k);
}

}  // namespace

std::vector<std::size_t> LocalModel::tangent() const { return tangent_of(ring->size(), base); }

PolyMatrix LocalModel::sigma() const {
    auto t = tangent();
    PolyMatrix s = zero_matrix(ring, weights.k(), t.size());
    for (std::size_t a = 0; a < weights.k(); ++a)
        for (std::size_t j = 0; j < t.size(); ++j)
            s[a][j] = MultiPoly::variable(ring, t[j]) * Rational(weights(a, t[j]));
    return s;
}

EquivariantBundle blowup_bundle(const EquivariantBundle& f, const BlowupChart& chart) {
    EquivariantBundle out = f;
    IntRow shift = chart.parent_weights.column(chart.pivot);
    const std::string& xi = chart.ring->name(chart.xi);
    for (std::size_t j = 0; j < f.rank(); ++j) {
        if (!nonzero(chart.center.restrict(f.weights[j]))) continue;
        out.labels[j] = xi + "*" + f.labels[j];
        for (std::size_t a = 0; a < shift.size(); ++a) out.weights[j][a] += shift[a];
    }
    return out;
}

LocalModel dcritical_chart(const MultiPoly& f, const WeightMatrix& w, std::optional<std::size_t> base) {
    if (f.ring()->size() != w.n()) throw PreconditionError("potential ring does not match weights");
    if (!is_invariant(f, w)) throw PreconditionError("potential " + f.to_string() + " is not invariant");
    require_base_weight_zero(w, base);
    LocalModel m;
    m.ring = f.ring();
    m.weights = w;
    m.base = base;
    m.divisor = MultiPoly(m.ring, 1);
    auto t = m.tangent();
    for (auto i : t) {
        m.bundle.labels.push_back("d" + m.ring->name(i));
        m.bundle.weights.push_back(w.column(i));
        m.section.push_back(f.derivative(i));
    }
    m.has_cofactor = true;
    m.phi = m.sigma();
    m.psi = identity_matrix(m.ring, t.size());
    return m;
}

LocalModel ideal_model(const Ideal& ideal, const WeightMatrix& w, std::optional<std::size_t> base) {
    if (ideal.ring()->size() != w.n()) throw PreconditionError("ideal ring does not match weights");
    require_base_weight_zero(w, base);
    LocalModel m;
    m.ring = ideal.ring();
    m.weights = w;
    m.base = base;
    m.divisor = MultiPoly(m.ring, 1);
    const Subtorus g = Subtorus::full(w.k());
    for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
        const auto& p = ideal.generators()[j];
        auto wt = homogeneous_weight(p, w, g);
        if (!wt) throw PreconditionError("ideal generator " + p.to_string() + " is not weight-homogeneous");
        m.bundle.labels.push_back("e" + std::to_string(j + 1));
        m.bundle.weights.push_back(negate(*wt));
        m.section.push_back(p);
    }
    return m;
}

LocalModel restrict_model(const LocalModel& m, const Subtorus& r) {
    if (r.ambient_rank() != m.weights.k()) throw PreconditionError("restrict_model: subtorus of another torus");
    if (r == Subtorus::full(m.weights.k())) return m;
    LocalModel out = m;
    out.weights = restricted_weights(m.weights, r);
    for (auto& u : out.bundle.weights) u = r.restrict(u);
    if (m.has_cofactor) {
        out.phi = zero_matrix(m.ring, r.dim(), m.section.size());
        for (std::size_t j = 0; j < r.dim(); ++j)
            for (std::size_t l = 0; l < m.section.size(); ++l)
                for (std::size_t a = 0; a < m.weights.k(); ++a)
                    if (r.cochar()[j][a] != 0) out.phi[j][l] += m.phi[a][l] * Rational(r.cochar()[j][a]);
    }
    return out;
}

bool support_semistable(const LocalModel& m, const std::vector<std::size_t>& support) {
    if (m.ancestry.empty()) return true;
    QVector point(m.ring->size());
    for (auto i : support) point[i] = 1;
    return point_semistable(point, m.ancestry).semistable;
}

ModelCheck check_weak_local_model(const LocalModel& m) {
    ModelCheck c;
    const Subtorus g = Subtorus::full(m.weights.k());
    for (std::size_t j = 0; j < m.section.size(); ++j) {
        const auto& s = m.section[j];
        if (s.is_zero()) continue;
        auto wt = homogeneous_weight(s, m.weights, g);
        if (!wt || *wt != negate(m.bundle.weights[j])) {
            c.weights = false;
            c.witnesses.push_back("section component " + std::to_string(j) + " has the wrong weight: " + s.to_string());
        }
    }
    if (!m.has_cofactor) return c;
    auto cos = multiply(m.phi, m.section);
    for (std::size_t a = 0; a < cos.size(); ++a) {
        if (!cos[a].is_zero()) {
            c.cosection = false;
            c.witnesses.push_back("phi*omega row " + std::to_string(a) + " = " + cos[a].to_string());
        }
    }
    auto prod = multiply(m.phi, m.psi);
    auto sig = m.sigma();
    for (std::size_t a = 0; a < sig.size(); ++a)
        for (std::size_t i = 0; i < sig[a].size(); ++i)
            if (!(prod[a][i] == sig[a][i])) {
                c.factorization = false;
                c.witnesses.push_back("phi*psi - sigma at (" + std::to_string(a) + "," + std::to_string(i) +
                                      ") = " + (prod[a][i] - sig[a][i]).to_string());
            }
    // Isotropy: for stabilisers of closed semistable orbits, the stabiliser
    // rows of phi vanish on the fixed locus.
    auto scan = enumerate_blowup_centers(
        m.weights, m.ideal(), [&](const std::vector<std::size_t>& s) { return support_semistable(m, s); });
    for (const auto& rp : scan.centers) {
        auto mv = moving_coordinates(m.weights, rp);
        for (std::size_t j = 0; j < rp.dim(); ++j) {
            for (std::size_t l = 0; l < m.section.size(); ++l) {
                MultiPoly e(m.ring);
                for (std::size_t a = 0; a < m.weights.k(); ++a)
                    if (rp.cochar()[j][a] != 0) e += m.phi[a][l] * Rational(rp.cochar()[j][a]);
                for (auto i : mv) e = e.substitute_value(i, 0);
                if (!e.is_zero()) {
                    c.isotropy = false;
                    c.witnesses.push_back("stabiliser " + rp.to_string() + " row of phi nonzero on fixed locus: " +
                                          e.to_string());
                }
            }
        }
    }
    return c;
}

PolyVector blowup_section(const LocalModel& m, const BlowupChart& chart) {
    if (!same_ring(m.ring, chart.parent)) throw PreconditionError("blowup_section: chart of another ring");
    PolyVector out;
    for (std::size_t j = 0; j < m.section.size(); ++j) {
        MultiPoly pb = chart.pullback(m.section[j]);
        if (nonzero(chart.center.restrict(m.bundle.weights[j]))) pb = exceptional_divide(pb, chart);
        out.push_back(std::move(pb));
    }
    return out;
}

std::vector<BlowupChart> model_charts(const LocalModel& m, const Subtorus& r) {
    return make_charts(m.ring, restricted_weights(m.weights, r), Subtorus::full(r.dim()));
}

LocalModel blowup_local_model(const LocalModel& m0, const Subtorus& r, const BlowupChart& chart) {
    LocalModel m = restrict_model(m0, r);
    if (!same_ring(m.ring, chart.parent) || !(chart.parent_weights == m.weights) ||
        !(chart.center == Subtorus::full(m.weights.k()))) {
        throw PreconditionError("blowup_local_model: chart was not built by model_charts for this center");
    }
    LocalModel out;
    out.ring = chart.ring;
    out.weights = chart.weights;
    out.base = m.base;
    out.bundle = blowup_bundle(m.bundle, chart);
    out.bundle.twist = m.bundle.twist + 2;
    out.section = blowup_section(m, chart);
    const MultiPoly xi = MultiPoly::variable(chart.ring, chart.xi);
    out.divisor = xi * xi * chart.pullback(m.divisor);
    out.ancestry = m.ancestry;
    out.ancestry.push_back(chart);
    out.has_cofactor = m.has_cofactor;
    if (!m.has_cofactor) return out;

    const std::size_t r_ = m.section.size();
    std::vector<bool> frame_moving(r_);
    for (std::size_t l = 0; l < r_; ++l) frame_moving[l] = nonzero(m.bundle.weights[l]);

    out.phi = zero_matrix(chart.ring, m.weights.k(), r_);
    for (std::size_t a = 0; a < m.weights.k(); ++a)
        for (std::size_t l = 0; l < r_; ++l)
            out.phi[a][l] = divide_xi_power(chart.pullback(m.phi[a][l]), chart.xi, frame_moving[l] ? 1 : 2,
                                            "phi-factorization");

    // xi * dy_m = sum_i K[m][i] dx_i on tangent coordinates.
    auto t = m.tangent();
    const std::size_t nt = t.size();
    std::size_t pivot_pos = nt;
    for (std::size_t p = 0; p < nt; ++p)
        if (t[p] == chart.pivot) pivot_pos = p;
    PolyMatrix kmat = zero_matrix(chart.ring, nt, nt);
    for (std::size_t p = 0; p < nt; ++p) {
        const std::size_t idx = t[p];
        if (idx == chart.pivot) {
            kmat[p][pivot_pos] = xi;
        } else if (chart.moving[idx]) {
            kmat[p][p] = MultiPoly(chart.ring, 1);
            kmat[p][pivot_pos] = -MultiPoly::variable(chart.ring, idx);
        } else {
            kmat[p][p] = xi;
        }
    }
    PolyMatrix pulled = zero_matrix(chart.ring, r_, nt);
    for (std::size_t l = 0; l < r_; ++l)
        for (std::size_t i = 0; i < nt; ++i) pulled[l][i] = chart.pullback(m.psi[l][i]);
    out.psi = multiply(pulled, transpose(kmat));
    for (std::size_t l = 0; l < r_; ++l)
        if (!frame_moving[l])
            for (auto& e : out.psi[l]) e *= xi;
    return out;
}

}  // namespace equiblow
