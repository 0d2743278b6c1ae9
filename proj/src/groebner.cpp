#include "equiblow/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace equiblow {

namespace {

std::atomic<std::size_t> g_max_basis{2000};
std::atomic<long> g_max_degree{40};

struct Term {
    Monomial m;
    Rational c;
};

// Basis element in the working order: terms sorted descending, monic.
struct GPoly {
    std::vector<Term> terms;
    long sugar = 0;
    std::vector<MultiPoly> cofactors;  // only when tracking

    const Monomial& lm() const { return terms.front().m; }
};

struct Desc {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using Work = std::map<Monomial, Rational, Desc>;

struct Step {
    std::size_t reducer;
    Monomial mult;
    Rational coeff;
};

class Engine {
public:
    Engine(RingPtr ring, MonomialOrder order, Budget budget, bool track, std::size_t inputs)
        : ring_(std::move(ring)), order_(order), budget_(budget), track_(track), inputs_(inputs) {}

    Work work_from(const MultiPoly& p) const {
        Work w(Desc{&order_});
        for (const auto& [m, c] : p.terms()) w.emplace(m, c);
        return w;
    }

    // Full reduction of w by `reducers`; returns the remainder (descending).
    std::vector<Term> reduce(Work w, const std::vector<const GPoly*>& reducers,
                             std::vector<Step>* steps) const {
        std::vector<Term> rem;
        while (!w.empty()) {
            auto it = w.begin();
            const GPoly* found = nullptr;
            std::size_t found_idx = 0;
            for (std::size_t k = 0; k < reducers.size(); ++k) {
                if (reducers[k]->lm().divides(it->first)) {
                    found = reducers[k];
                    found_idx = k;
                    break;
                }
            }
            if (!found) {
                rem.push_back({it->first, it->second});
                w.erase(it);
                continue;
            }
            Monomial mult = it->first / found->lm();
            Rational coeff = it->second;
            for (const auto& t : found->terms) {
                Monomial mm = t.m * mult;
                auto [pos, inserted] = w.try_emplace(std::move(mm), -coeff * t.c);
                if (!inserted) {
                    pos->second -= coeff * t.c;
                    if (pos->second == 0) w.erase(pos);
                }
            }
            if (steps) steps->push_back({found_idx, std::move(mult), std::move(coeff)});
        }
        return rem;
    }

    void apply_steps(std::vector<MultiPoly>& cof, const std::vector<Step>& steps,
                     const std::vector<const GPoly*>& reducers) const {
        for (const auto& s : steps) {
            const auto& rc = reducers[s.reducer]->cofactors;
            for (std::size_t i = 0; i < cof.size(); ++i) {
                if (!rc[i].is_zero()) cof[i] -= rc[i].mul_monomial(s.mult, s.coeff);
            }
        }
    }

    std::vector<const GPoly*> all_reducers() const {
        std::vector<const GPoly*> r;
        r.reserve(pool_.size());
        for (const auto& g : pool_) r.push_back(&g);
        return r;
    }

    // Makes `rem` monic and adds it with the Gebauer-Moeller update.
    void add(std::vector<Term> rem, long sugar, std::vector<MultiPoly> cof) {
        Rational lc = rem.front().c;
        if (lc != 1) {
            Rational inv = 1 / lc;
            for (auto& t : rem) t.c *= inv;
            for (auto& c : cof) c *= inv;
        }
        long deg = 0;
        for (const auto& t : rem) deg = std::max(deg, t.m.degree());
        if (deg > budget_.max_degree) {
            throw BudgetExceeded("Groebner basis element of degree " + std::to_string(deg) +
                                 " exceeds degree cap " + std::to_string(budget_.max_degree));
        }
        if (pool_.size() + 1 > budget_.max_basis) {
            throw BudgetExceeded("Groebner basis size exceeds cap " + std::to_string(budget_.max_basis));
        }
        GPoly h{std::move(rem), std::max(sugar, deg), std::move(cof)};
        const std::size_t hi = pool_.size();
        pool_.push_back(std::move(h));
        update(hi);
        if (pool_[hi].terms.size() == 1 && pool_[hi].lm().is_one()) unit_ = hi;
    }

    void update(std::size_t h) {
        const Monomial& lh = pool_[h].lm();
        std::vector<std::size_t> cands;
        for (std::size_t g : active_) cands.push_back(g);
        // Chain criterion on the new pairs.
        std::vector<std::size_t> keep;
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
            std::size_t g1 = cands[idx];
            Monomial l1 = lh.lcm(pool_[g1].lm());
            if (lh.coprime(pool_[g1].lm())) {
                keep.push_back(g1);
                continue;
            }
            bool redundant = false;
            for (std::size_t jdx = 0; jdx < cands.size() && !redundant; ++jdx) {
                if (jdx == idx) continue;
                std::size_t g2 = cands[jdx];
                Monomial l2 = lh.lcm(pool_[g2].lm());
                if (l2.divides(l1) && (l2 != l1 || jdx < idx)) {
                    // Equal lcms: keep exactly one representative.
                    if (l2 == l1 && lh.coprime(pool_[g2].lm())) {
                        redundant = true;
                    } else if (l2 != l1 || jdx < idx) {
                        redundant = true;
                    }
                }
            }
            if (!redundant) keep.push_back(g1);
        }
        // Old pairs made redundant by the new leading monomial.
        std::vector<Pair> survivors;
        for (const auto& p : pairs_) {
            const Monomial& l = p.lcm;
            if (lh.divides(l) && lh.lcm(pool_[p.i].lm()) != l && lh.lcm(pool_[p.j].lm()) != l) continue;
            survivors.push_back(p);
        }
        pairs_ = std::move(survivors);
        for (std::size_t g : keep) {
            if (lh.coprime(pool_[g].lm())) continue;  // product criterion
            Monomial l = lh.lcm(pool_[g].lm());
            long dl = l.degree();
            long s = std::max(pool_[h].sugar + dl - lh.degree(), pool_[g].sugar + dl - pool_[g].lm().degree());
            pairs_.push_back({g, h, std::move(l), s});
        }
        std::vector<std::size_t> still;
        for (std::size_t g : active_) {
            if (!lh.divides(pool_[g].lm())) still.push_back(g);
        }
        still.push_back(h);
        active_ = std::move(still);
    }

    void run(const std::vector<MultiPoly>& inputs) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (unit_) return;
            std::vector<Step> steps;
            auto reducers = all_reducers();
            auto rem = reduce(work_from(inputs[i]), reducers, track_ ? &steps : nullptr);
            if (rem.empty()) continue;
            std::vector<MultiPoly> cof;
            if (track_) {
                cof.assign(inputs_, MultiPoly(ring_));
                cof[i] = MultiPoly(ring_, 1);
                apply_steps(cof, steps, reducers);
            }
            add(std::move(rem), inputs[i].total_degree(), std::move(cof));
        }
        while (!pairs_.empty() && !unit_) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                int c = order_.compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                if (a.j != b.j) return a.j < b.j;
                return a.i < b.i;
            });
            Pair p = *best;
            pairs_.erase(best);
            const GPoly& gi = pool_[p.i];
            const GPoly& gj = pool_[p.j];
            Monomial mi = p.lcm / gi.lm();
            Monomial mj = p.lcm / gj.lm();
            Work w(Desc{&order_});
            for (std::size_t k = 1; k < gi.terms.size(); ++k) w.emplace(gi.terms[k].m * mi, gi.terms[k].c);
            for (std::size_t k = 1; k < gj.terms.size(); ++k) {
                Monomial mm = gj.terms[k].m * mj;
                auto [pos, inserted] = w.try_emplace(std::move(mm), -gj.terms[k].c);
                if (!inserted) {
                    pos->second -= gj.terms[k].c;
                    if (pos->second == 0) w.erase(pos);
                }
            }
            std::vector<MultiPoly> cof;
            if (track_) {
                cof.assign(inputs_, MultiPoly(ring_));
                for (std::size_t k = 0; k < inputs_; ++k) {
                    cof[k] = gi.cofactors[k].mul_monomial(mi, 1) - gj.cofactors[k].mul_monomial(mj, 1);
                }
            }
            std::vector<Step> steps;
            auto reducers = all_reducers();
            auto rem = reduce(std::move(w), reducers, track_ ? &steps : nullptr);
            if (rem.empty()) continue;
            if (track_) apply_steps(cof, steps, reducers);
            add(std::move(rem), p.sugar, std::move(cof));
        }
    }

    // Minimal, tail-reduced, monic basis sorted ascending; cofactors follow.
    std::vector<GPoly> reduced() const {
        if (unit_) return {pool_[*unit_]};
        std::vector<GPoly> minimal;
        for (std::size_t g = 0; g < pool_.size(); ++g) {
            bool redundant = false;
            for (std::size_t h = 0; h < pool_.size() && !redundant; ++h) {
                if (h != g && pool_[h].lm().divides(pool_[g].lm())) redundant = true;
            }
            if (!redundant) minimal.push_back(pool_[g]);
        }
        std::vector<GPoly> out;
        for (std::size_t g = 0; g < minimal.size(); ++g) {
            std::vector<const GPoly*> others;
            for (std::size_t h = 0; h < minimal.size(); ++h) {
                if (h != g) others.push_back(&minimal[h]);
            }
            Work tail(Desc{&order_});
            for (std::size_t k = 1; k < minimal[g].terms.size(); ++k) {
                tail.emplace(minimal[g].terms[k].m, minimal[g].terms[k].c);
            }
            std::vector<Step> steps;
            auto rem = reduce(std::move(tail), others, track_ ? &steps : nullptr);
            GPoly r;
            r.terms.push_back(minimal[g].terms.front());
            for (auto& t : rem) r.terms.push_back(std::move(t));
            r.sugar = minimal[g].sugar;
            if (track_) {
                r.cofactors = minimal[g].cofactors;
                apply_steps(r.cofactors, steps, others);
            }
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [&](const GPoly& a, const GPoly& b) { return order_.compare(a.lm(), b.lm()) < 0; });
        return out;
    }

    MultiPoly to_poly(const GPoly& g) const {
        MultiPoly p(ring_);
        for (const auto& t : g.terms) p.add_term(t.m, t.c);
        return p;
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        long sugar;
    };

    RingPtr ring_;
    MonomialOrder order_;
    Budget budget_;
    bool track_;
    std::size_t inputs_;
    std::vector<GPoly> pool_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    std::optional<std::size_t> unit_;
};

std::vector<GPoly> basis_as_gpolys(const GroebnerBasis& gb) {
    std::vector<GPoly> out;
    Desc desc{&gb.order};
    for (const auto& p : gb.basis) {
        GPoly g;
        for (const auto& [m, c] : p.terms()) g.terms.push_back({m, c});
        std::sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) { return desc(a.m, b.m); });
        out.push_back(std::move(g));
    }
    return out;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (!same_ring(a, b)) throw PreconditionError(std::string(what) + ": ring mismatch");
}

}  // namespace

Budget default_budget() { return Budget{g_max_basis.load(), g_max_degree.load()}; }

void set_default_budget(const Budget& b) {
    g_max_basis.store(b.max_basis);
    g_max_degree.store(b.max_degree);
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) add(g);
}

void Ideal::add(const MultiPoly& p) {
    if (p.is_zero()) return;
    if (!same_ring(p.ring(), ring_)) throw PreconditionError("ideal generator from a different ring");
    gens_.push_back(p);
}

Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    Ideal r = a;
    for (const auto& g : b.generators()) r.add(g);
    return r;
}

Ideal product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal product");
    Ideal r(a.ring());
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        for (std::size_t j = 0; j < b.generators().size(); ++j) {
            // Symmetric products of an ideal with itself are listed once.
            if (&a == &b && j < i) continue;
            r.add(a.generators()[i] * b.generators()[j]);
        }
    }
    return r;
}

// ---------------------------------------------------------------- bases

bool GroebnerBasis::is_unit() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }

std::vector<std::string> GroebnerBasis::strings() const {
    std::vector<std::string> s;
    for (const auto& p : basis) s.push_back(p.to_string());
    return s;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    return same_ring(ring, o.ring) && order == o.order && basis == o.basis;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
    return buchberger(ideal, order, default_budget());
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget) {
    Engine e(ideal.ring(), order, budget, false, ideal.generators().size());
    e.run(ideal.generators());
    GroebnerBasis gb{ideal.ring(), order, {}};
    for (const auto& g : e.reduced()) gb.basis.push_back(e.to_poly(g));
    return gb;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    if (!p.is_zero()) require_same_ring(p.ring(), gb.ring, "normal_form");
    auto gps = basis_as_gpolys(gb);
    std::vector<const GPoly*> reducers;
    for (const auto& g : gps) reducers.push_back(&g);
    Engine e(gb.ring, gb.order, default_budget(), false, 0);
    auto rem = e.reduce(e.work_from(p), reducers, nullptr);
    MultiPoly r(gb.ring);
    for (const auto& t : rem) r.add_term(t.m, t.c);
    return r;
}

bool contains(const GroebnerBasis& gb, const MultiPoly& p) { return normal_form(p, gb).is_zero(); }

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
    require_same_ring(a.ring(), b.ring(), "ideal_equal");
    return buchberger(a, order).basis == buchberger(b, order).basis;
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
    auto gb = buchberger(big);
    for (const auto& g : small.generators()) {
        if (!contains(gb, g)) return false;
    }
    return true;
}

bool is_unit_ideal(const Ideal& ideal) { return buchberger(ideal).is_unit(); }

std::optional<std::vector<MultiPoly>> lift_certificate(const MultiPoly& p, const Ideal& ideal) {
    const auto& gens = ideal.generators();
    std::vector<MultiPoly> q(gens.size(), MultiPoly(ideal.ring()));
    if (p.is_zero()) return q;
    require_same_ring(p.ring(), ideal.ring(), "lift_certificate");
    if (gens.empty()) return std::nullopt;
    const auto order = MonomialOrder::degrevlex();
    Engine e(ideal.ring(), order, default_budget(), true, gens.size());
    e.run(gens);
    auto basis = e.reduced();
    std::vector<const GPoly*> reducers;
    for (const auto& g : basis) reducers.push_back(&g);
    std::vector<Step> steps;
    auto rem = e.reduce(e.work_from(p), reducers, &steps);
    if (!rem.empty()) return std::nullopt;
    for (const auto& s : steps) {
        const auto& cof = reducers[s.reducer]->cofactors;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!cof[i].is_zero()) q[i] += cof[i].mul_monomial(s.mult, s.coeff);
        }
    }
    MultiPoly check(ideal.ring());
    for (std::size_t i = 0; i < gens.size(); ++i) check += q[i] * gens[i];
    if (!(check == p)) {
        throw TheoremCheckFailure("lift_certificate", "quotients do not re-expand to the input");
    }
    return q;
}

Ideal eliminate(const Ideal& ideal, std::span<const std::string> vars) {
    const RingPtr& ring = ideal.ring();
    std::vector<std::string> order_names;
    std::vector<std::string> kept;
    for (const auto& v : vars) {
        ring->require(v);
        order_names.push_back(v);
    }
    for (const auto& name : ring->names()) {
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
            order_names.push_back(name);
            kept.push_back(name);
        }
    }
    RingPtr work = make_ring(order_names);
    RingPtr sub = make_ring(kept);
    Ideal moved(work);
    for (const auto& g : ideal.generators()) moved.add(g.rename_into(work));
    auto gb = buchberger(moved, MonomialOrder::elimination(vars.size()));
    Ideal out(sub);
    for (const auto& g : gb.basis) {
        bool free = true;
        for (const auto& [m, c] : g.terms()) {
            for (std::size_t i = 0; i < vars.size() && free; ++i) free = m[i] == 0;
            if (!free) break;
        }
        if (free) out.add(g.rename_into(sub));
    }
    return out;
}

Ideal saturate(const Ideal& ideal, const MultiPoly& h) {
    if (h.is_zero()) throw PreconditionError("saturate: zero polynomial");
    const RingPtr& ring = ideal.ring();
    std::string t = "_sat_t";
    while (ring->index_of(t)) t += "_";
    std::vector<std::string> names{t};
    for (const auto& n : ring->names()) names.push_back(n);
    RingPtr ext = make_ring(names);
    Ideal big(ext);
    for (const auto& g : ideal.generators()) big.add(g.rename_into(ext));
    big.add(MultiPoly::variable(ext, 0) * h.rename_into(ext) - MultiPoly(ext, 1));
    Ideal elim = eliminate(big, std::vector<std::string>{t});
    // Same variable order as the input ring; re-anchor on the caller's ring.
    Ideal out(ring);
    for (const auto& g : elim.generators()) out.add(g.rename_into(ring));
    return out;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "intersect");
    const RingPtr& ring = a.ring();
    if (a.empty() || b.empty()) return Ideal(ring);
    std::string t = "_int_t";
    while (ring->index_of(t)) t += "_";
    std::vector<std::string> names{t};
    for (const auto& n : ring->names()) names.push_back(n);
    RingPtr ext = make_ring(names);
    MultiPoly tv = MultiPoly::variable(ext, 0);
    MultiPoly one(ext, 1);
    Ideal big(ext);
    for (const auto& g : a.generators()) big.add(tv * g.rename_into(ext));
    for (const auto& g : b.generators()) big.add((one - tv) * g.rename_into(ext));
    Ideal elim = eliminate(big, std::vector<std::string>{t});
    Ideal out(ring);
    for (const auto& g : elim.generators()) out.add(g.rename_into(ring));
    return out;
}

bool spolynomials_reduce_to_zero(const GroebnerBasis& gb) {
    const auto& b = gb.basis;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            Monomial li = b[i].leading_monomial(gb.order);
            Monomial lj = b[j].leading_monomial(gb.order);
            Monomial l = li.lcm(lj);
            MultiPoly s = b[i].mul_monomial(l / li, 1 / b[i].coefficient(li)) -
                          b[j].mul_monomial(l / lj, 1 / b[j].coefficient(lj));
            if (!normal_form(s, gb).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace equiblow
