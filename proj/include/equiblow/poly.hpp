#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equiblow/errors.hpp"

namespace equiblow {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text of a rational: "n" or "n/d" with d > 0.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Ordered list of variable names.  Rings are shared immutably between
/// polynomials; two rings are the same ring iff their name lists agree.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars);

    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& names() const { return vars_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponent = std::int32_t;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : e_(n, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}

    static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    long degree() const;
    bool is_one() const;
    bool divides(const Monomial& m) const;
    bool coprime(const Monomial& m) const;

    Monomial operator*(const Monomial& m) const;
    /// Requires divides(*this, m) in the reverse direction: m | *this.
    Monomial operator/(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Exponent> e_;
};

/// Total orders on monomials used by the Groebner engine.  Block(m) is an
/// elimination order for the first m variables (degrevlex inside each block).
struct MonomialOrder {
    enum class Kind { DegRevLex, Lex, Block };
    Kind kind = Kind::DegRevLex;
    std::size_t block = 0;

    static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elimination(std::size_t first) { return {Kind::Block, first}; }

    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool operator==(const MonomialOrder&) const = default;
    std::string name() const;
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, const Rational& c);

    static MultiPoly variable(const RingPtr& ring, std::size_t i);
    static MultiPoly variable(const RingPtr& ring, std::string_view name);
    static MultiPoly monomial(const RingPtr& ring, const Monomial& m, const Rational& c = 1);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    long total_degree() const;
    Exponent degree_in(std::size_t var) const;

    /// Adds c*m; drops the entry if the coefficient cancels.
    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;
    MultiPoly pow(unsigned k) const;

    bool operator==(const MultiPoly& o) const;

    /// Leading monomial under the given order; requires a nonzero polynomial.
    Monomial leading_monomial(const MonomialOrder& order) const;
    Rational leading_coefficient(const MonomialOrder& order) const;

    MultiPoly derivative(std::size_t var) const;
    MultiPoly derivative(std::string_view var) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Ring homomorphism sending variable i to images[i]; all images share
    /// one target ring.
    MultiPoly substitute(std::span<const MultiPoly> images, const RingPtr& target) const;
    /// Replaces variable `var` by the constant c, keeping the ring.
    MultiPoly substitute_value(std::size_t var, const Rational& c) const;

    /// Re-expresses the polynomial in a ring containing every variable that
    /// actually occurs (matched by name).
    MultiPoly rename_into(const RingPtr& target) const;

    /// Canonical text, terms in descending degrevlex order.
    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Exact quotient p / q, or nullopt if q does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Product of a monomial power of variable `var` dividing every term of p.
Exponent min_exponent(const MultiPoly& p, std::size_t var);

/// Divides every term by var^k; requires min_exponent(p, var) >= k.
MultiPoly divide_by_variable(const MultiPoly& p, std::size_t var, Exponent k);

using PolyVector = std::vector<MultiPoly>;
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

PolyMatrix zero_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols);
PolyMatrix identity_matrix(const RingPtr& ring, std::size_t n);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyVector multiply(const PolyMatrix& a, const PolyVector& v);
PolyMatrix transpose(const PolyMatrix& a);
bool is_zero(const PolyMatrix& a);
bool is_zero(const PolyVector& v);

/// Jacobian d(components)/d(vars): rows = components, columns = vars.
PolyMatrix jacobian(const PolyVector& components, std::span<const std::size_t> vars);

}  // namespace equiblow
