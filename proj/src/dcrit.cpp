#include "equiblow/dcrit.hpp"

#include <algorithm>

namespace equiblow {

namespace {

bool nonzero(const IntRow& w) {
    return std::any_of(w.begin(), w.end(), [](long x) { return x != 0; });
}

void require_on_u(const LocalModel& m, std::span<const Rational> point) {
    if (point.size() != m.ring->size()) throw PreconditionError("point has the wrong number of coordinates");
    for (const auto& s : m.section)
        if (s.evaluate(point) != 0) throw PreconditionError("point does not lie on U: " + s.to_string() + " != 0");
}

QMatrix section_jacobian(const LocalModel& m, std::span<const Rational> point) {
    auto t = m.tangent();
    return evaluate(jacobian(m.section, t), point, m.section.size(), t.size());
}

// Pieces of p of weight `target`.
MultiPoly weight_piece(const MultiPoly& p, const WeightMatrix& w, const IntRow& target) {
    for (auto& piece : isotypic_decompose(p, w, Subtorus::full(w.k())))
        if (piece.weight == target) return piece.part;
    return MultiPoly(p.ring());
}

// B = b + b^T from g - f = sum_{k<=l} q_kl f_k f_l, projected to weight w_k + w_l.
std::optional<PolyMatrix> symmetric_certificate(const MultiPoly& diff, const PolyVector& grad, const WeightMatrix& w) {
    const RingPtr& ring = diff.ring();
    const std::size_t n = grad.size();
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    Ideal products(ring);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            MultiPoly p = grad[k] * grad[l];
            if (p.is_zero()) continue;
            idx.emplace_back(k, l);
            products.add(p);
        }
    auto q = lift_certificate(diff, products);
    if (!q) return std::nullopt;
    PolyMatrix b = zero_matrix(ring, n, n);
    for (std::size_t j = 0; j < idx.size(); ++j) {
        auto [k, l] = idx[j];
        IntRow target(w.k());
        for (std::size_t a = 0; a < w.k(); ++a) target[a] = w(a, k) + w(a, l);
        MultiPoly piece = weight_piece((*q)[j], w, target);
        b[k][l] += piece;
        b[l][k] += piece;
    }
    return b;
}

PolyMatrix negated(PolyMatrix m) {
    for (auto& r : m)
        for (auto& e : r) e = -e;
    return m;
}

}  // namespace

QVector SmallExtension::base_point() const {
    QVector p;
    for (const auto& s : series) p.push_back(s.empty() ? Rational(0) : s[0]);
    return p;
}

FourTermComplex four_term_at(const LocalModel& m, std::span<const Rational> point) {
    if (!m.has_cofactor) throw PreconditionError("four-term complex needs a model with a cofactor phi");
    require_on_u(m, point);
    auto t = m.tangent();
    const std::size_t k = m.weights.k(), r = m.section.size();
    FourTermComplex c;
    c.point.assign(point.begin(), point.end());
    c.twist = m.bundle.twist;
    c.m0 = QMatrix(t.size(), k);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t a = 0; a < k; ++a) c.m0(i, a) = m.weights(a, t[i]) * point[t[i]];
    c.m1 = section_jacobian(m, point);
    c.m2 = evaluate(m.phi, point, k, r);
    c.m1m0_zero = (c.m1 * c.m0).is_zero();
    c.m2m1_zero = (c.m2 * c.m1).is_zero();
    return c;
}

std::array<long, 4> cohomology_dims(const FourTermComplex& c) {
    if (!c.m1m0_zero || !c.m2m1_zero) throw TheoremCheckFailure("complex", "compositions of the four-term complex do not vanish");
    const long k = static_cast<long>(c.m0.cols());
    const long n = static_cast<long>(c.m0.rows());
    const long r = static_cast<long>(c.m1.rows());
    const long r0 = static_cast<long>(rank(c.m0));
    const long r1 = static_cast<long>(rank(c.m1));
    const long r2 = static_cast<long>(rank(c.m2));
    return {k - r0, n - r1 - r0, r - r2 - r1, k - r2};
}

ReducedObstruction reduced_obstruction_dim(const LocalModel& m, std::span<const Rational> point) {
    require_on_u(m, point);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i] != 0) support.push_back(i);
    if (!stabilizer_subtorus(support, m.weights).is_trivial())
        throw PreconditionError("point has a positive-dimensional stabiliser; the reduced theory needs a stable point");
    ReducedObstruction out;
    out.orbit_not_closed = !orbit_is_closed(support, m.weights);
    out.dim = cohomology_dims(four_term_at(m, point))[2];
    return out;
}

ObstructionResult obstruction_assignment(const LocalModel& m, const SmallExtension& ext) {
    if (ext.m < 1) throw PreconditionError("small extension needs order m >= 1");
    if (ext.series.size() != m.ring->size()) throw PreconditionError("extension has the wrong number of coordinates");
    for (const auto& s : ext.series)
        if (s.size() > ext.m) throw PreconditionError("extension series longer than its order");
    RingPtr er = make_ring({"eps"});
    std::vector<MultiPoly> images;
    for (const auto& s : ext.series) {
        MultiPoly g(er);
        for (std::size_t j = 0; j < s.size(); ++j)
            g.add_term(Monomial::variable(1, 0, static_cast<Exponent>(j)), s[j]);
        images.push_back(std::move(g));
    }
    ObstructionResult res;
    for (const auto& w : m.section) {
        MultiPoly v = w.substitute(images, er);
        for (std::size_t d = 0; d < ext.m; ++d)
            if (v.coefficient(Monomial::variable(1, 0, static_cast<Exponent>(d))) != 0)
                throw PreconditionError("extension does not map into U to order " + std::to_string(ext.m - 1));
        res.raw.push_back(v.coefficient(Monomial::variable(1, 0, static_cast<Exponent>(ext.m))));
    }
    QMatrix j = section_jacobian(m, ext.base_point());
    auto dual = nullspace(j.transpose());
    res.coker_dim = dual.size();
    for (const auto& y : dual) {
        Rational s = 0;
        for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * res.raw[i];
        res.cls.push_back(s);
    }
    res.vanishes = std::all_of(res.cls.begin(), res.cls.end(), [](const Rational& x) { return x == 0; });
    return res;
}

OmegaReport verify_omega_equivalence(const LocalModel& m, const PolyVector& omega_bar, const OmegaData& data) {
    OmegaReport rep;
    const RingPtr& ring = m.ring;
    const auto t = m.tangent();
    const std::size_t r = m.section.size(), n = t.size();
    if (omega_bar.size() != r) throw PreconditionError("sections of different rank");
    if (data.a.size() != n || data.b.size() != n) throw PreconditionError("A and B must be n x r");
    MultiPoly h = data.hint.is_zero() ? MultiPoly(ring, 1) : data.hint;
    auto sat = [&](const Ideal& i) { return h.is_constant() ? i : saturate(i, h); };

    Ideal iu = sat(Ideal(ring, m.section));
    Ideal iu_bar = sat(Ideal(ring, omega_bar));
    rep.ideals = ideal_equal(iu, iu_bar);
    if (!rep.ideals) rep.witnesses.push_back("zero ideals differ after localisation");
    auto sq = buchberger(sat(product(iu, iu)));

    auto identity = [&](const PolyVector& lhs, const PolyVector& rhs, const PolyMatrix& mat, const char* label) {
        PolyMatrix jac = jacobian(rhs, t);
        PolyVector mw = multiply(mat, rhs);
        PolyVector corr = multiply(jac, mw);
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i) {
            MultiPoly e = lhs[i] - rhs[i] - corr[i];
            if (!contains(sq, e)) {
                ok = false;
                rep.witnesses.push_back(std::string(label) + " component " + std::to_string(i) + ": " + e.to_string() +
                                        " not in I^2");
            }
        }
        return ok;
    };
    rep.forward = identity(m.section, omega_bar, data.a, "forward");
    rep.backward = identity(omega_bar, m.section, data.b, "backward");

    rep.equivariant = true;
    const Subtorus g = Subtorus::full(m.weights.k());
    for (const auto* mat : {&data.a, &data.b}) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < r; ++l) {
                const MultiPoly& e = (*mat)[j][l];
                if (e.is_zero()) continue;
                IntRow want = m.bundle.weights[l];
                for (std::size_t a = 0; a < want.size(); ++a) want[a] += m.weights(a, t[j]);
                auto got = homogeneous_weight(e, m.weights, g);
                if (!got || *got != want) {
                    rep.equivariant = false;
                    rep.witnesses.push_back("entry (" + std::to_string(j) + "," + std::to_string(l) +
                                            ") is not of weight " + format_weight(want));
                }
            }
    }
    return rep;
}

OmegaData construct_equivalence(const MultiPoly& f, const MultiPoly& g, const WeightMatrix& w) {
    if (!same_ring(f.ring(), g.ring())) throw PreconditionError("potentials on different rings");
    LocalModel mf = dcritical_chart(f, w);
    LocalModel mg = dcritical_chart(g, w);
    const RingPtr& ring = f.ring();
    const std::size_t n = ring->size();
    auto b_cert = symmetric_certificate(g - f, mf.section, w);
    if (!b_cert) throw PreconditionError("g - f is not in the square of the critical ideal of f");
    auto a_cert = symmetric_certificate(f - g, mg.section, w);

    MultiPoly hint(ring, 1);
    if (!ideal_equal(mf.ideal(), mg.ideal())) {
        // Look for a common unit factor g_i = u * f_i.
        std::optional<MultiPoly> u;
        bool found = true;
        for (std::size_t i = 0; i < n && found; ++i) {
            if (mf.section[i].is_zero()) {
                found = mg.section[i].is_zero();
                continue;
            }
            auto q = divide_exact(mg.section[i], mf.section[i]);
            if (!q || (u && !(*q == *u))) found = false;
            else u = q;
        }
        if (!found || !u) throw PreconditionError("critical ideals differ; supply a localisation hint");
        hint = *u;
    }

    std::vector<PolyMatrix> a_options, b_options{*b_cert, zero_matrix(ring, n, n)};
    if (a_cert) a_options.push_back(*a_cert);
    a_options.push_back(zero_matrix(ring, n, n));
    a_options.push_back(negated(*b_cert));
    if (a_cert) b_options.push_back(negated(*a_cert));
    for (const auto& a : a_options) {
        for (const auto& b : b_options) {
            OmegaData d{a, b, hint};
            if (verify_omega_equivalence(mf, mg.section, d).ok()) return d;
        }
    }
    throw PreconditionError("no Omega-equivalence found among the certificate candidates");
}

PolyMatrix lift_morphism_to_blowup(const PolyMatrix& a, const LocalModel& m, const BlowupChart& chart) {
    if (!same_ring(m.ring, chart.parent) || !(chart.parent_weights == m.weights))
        throw PreconditionError("lift_morphism_to_blowup: chart does not belong to this model");
    const auto t = m.tangent();
    const std::size_t r = m.section.size();
    if (a.size() != t.size()) throw PreconditionError("A must be n x r");
    const Subtorus g = Subtorus::full(m.weights.k());
    for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t l = 0; l < r; ++l) {
            if (a[j][l].is_zero()) continue;
            IntRow want = m.bundle.weights[l];
            for (std::size_t x = 0; x < want.size(); ++x) want[x] += m.weights(x, t[j]);
            auto got = homogeneous_weight(a[j][l], m.weights, g);
            if (!got || *got != want) throw PreconditionError("morphism is not equivariant");
        }
    const MultiPoly xi = MultiPoly::variable(chart.ring, chart.xi);
    std::vector<MultiPoly> incl;
    for (std::size_t l = 0; l < r; ++l)
        incl.push_back(nonzero(chart.center.restrict(m.bundle.weights[l])) ? xi : MultiPoly(chart.ring, 1));
    std::size_t pivot_pos = t.size();
    for (std::size_t p = 0; p < t.size(); ++p)
        if (t[p] == chart.pivot) pivot_pos = p;
    PolyMatrix out = zero_matrix(chart.ring, t.size(), r);
    for (std::size_t p = 0; p < t.size(); ++p) {
        const std::size_t idx = t[p];
        for (std::size_t l = 0; l < r; ++l) {
            MultiPoly e = chart.pullback(a[p][l]);
            if (idx != chart.pivot && chart.moving[idx]) {
                e -= MultiPoly::variable(chart.ring, idx) * chart.pullback(a[pivot_pos][l]);
                e *= incl[l];
                if (!e.is_zero() && min_exponent(e, chart.xi) < 1)
                    throw TheoremCheckFailure("lift-divisibility", e.to_string() + " not divisible on " + chart.name);
                out[p][l] = e.is_zero() ? e : divide_by_variable(e, chart.xi, 1);
            } else {
                out[p][l] = e * incl[l];
            }
        }
    }
    return out;
}

PhiCk phi_ck_at_point(const LocalModel& small, const LocalModel& big, std::span<const Rational> point) {
    const RingPtr& rs = small.ring;
    const RingPtr& rb = big.ring;
    QVector pb(rb->size());
    std::vector<MultiPoly> restrict_images;
    for (std::size_t i = 0; i < rb->size(); ++i) {
        auto j = rs->index_of(rb->name(i));
        if (j) pb[i] = point[*j];
        restrict_images.push_back(j ? MultiPoly::variable(rs, *j) : MultiPoly(rs));
    }
    // eta keeps the frame elements of the big bundle that exist on V.
    std::vector<std::size_t> keep;
    for (const auto& label : small.bundle.labels) {
        auto it = std::find(big.bundle.labels.begin(), big.bundle.labels.end(), label);
        if (it == big.bundle.labels.end()) throw PreconditionError("frame " + label + " missing from the big model");
        keep.push_back(static_cast<std::size_t>(it - big.bundle.labels.begin()));
    }
    Ideal restricted(rs);
    for (auto j : keep) restricted.add(big.section[j].substitute(restrict_images, rs));
    if (!ideal_equal(restricted, small.ideal())) throw PreconditionError("incompatible sections");

    QMatrix mv = section_jacobian(small, point);
    QMatrix mw = section_jacobian(big, pb);
    // Columns of eta * M1_W, tangent coordinates of W.
    QMatrix eta_mw(keep.size(), mw.cols());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < mw.cols(); ++c) eta_mw(r, c) = mw(keep[r], c);
    PhiCk out;
    const std::size_t rv = rank(mv);
    out.coker_small = mv.rows() - rv;
    out.coker_big = mw.rows() - rank(mw);
    out.well_defined = rank(hconcat(mv, eta_mw)) == rv;
    out.bijective = out.well_defined && out.coker_small == out.coker_big;
    return out;
}

}  // namespace equiblow
