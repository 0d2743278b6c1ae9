#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equiblow/poly.hpp"

namespace equiblow {

/// Caps on a single Groebner computation.  Exceeding either raises
/// BudgetExceeded; a basis is never silently truncated.
struct Budget {
    std::size_t max_basis = 2000;
    long max_degree = 40;
};

/// Process-wide default used when no budget is passed explicitly.  The CLI
/// sets it once at startup (from --budget or EQUIBLOW_BUDGET).
Budget default_budget();
void set_default_budget(const Budget& b);

class Ideal {
public:
    Ideal() = default;
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<MultiPoly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    void add(const MultiPoly& p);

private:
    RingPtr ring_;
    std::vector<MultiPoly> gens_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    /// Reduced basis: monic, tail-reduced, sorted by ascending leading monomial.
    std::vector<MultiPoly> basis;

    bool is_unit() const;
    bool is_zero_ideal() const { return basis.empty(); }
    Ideal ideal() const { return Ideal(ring, basis); }
    std::vector<std::string> strings() const;
    bool operator==(const GroebnerBasis& o) const;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex());
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget);

/// Unique remainder of p modulo a reduced basis.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const MultiPoly& p);

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order = MonomialOrder::degrevlex());
bool ideal_contains(const Ideal& big, const Ideal& small);
bool is_unit_ideal(const Ideal& ideal);

/// Quotients q with p = sum q_i * generators[i], verified by re-expansion,
/// or nullopt when p is not in the ideal.
std::optional<std::vector<MultiPoly>> lift_certificate(const MultiPoly& p, const Ideal& ideal);

/// I : h^infinity, computed by eliminating an auxiliary t from I + (t*h - 1).
Ideal saturate(const Ideal& ideal, const MultiPoly& h);

/// I intersected with J, via elimination of t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

/// I intersected with the subring generated by the variables not in `vars`.
/// The result lives in that smaller ring (same variable order).
Ideal eliminate(const Ideal& ideal, std::span<const std::string> vars);

/// Self-check: every S-polynomial of the basis reduces to zero.
bool spolynomials_reduce_to_zero(const GroebnerBasis& gb);

}  // namespace equiblow
