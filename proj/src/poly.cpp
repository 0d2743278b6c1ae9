#include "equiblow/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace equiblow {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (vars_[i] == vars_[j]) throw PreconditionError("duplicate variable '" + vars_[i] + "'");
        }
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw PreconditionError("unknown variable '" + std::string(name) + "'");
    return *i;
}

RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
    Monomial m(n);
    m.e_[i] = power;
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (auto x : e_) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > m.e_[i]) return false;
    }
    return true;
}

bool Monomial::coprime(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > 0 && m.e_[i] > 0) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], m.e_[i]);
    return r;
}

// ---------------------------------------------------------------- orders

namespace {

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::DegRevLex:
            return degrevlex_range(a, b, 0, a.size());
        case Kind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        case Kind::Block: {
            std::size_t m = std::min(block, a.size());
            if (int c = degrevlex_range(a, b, 0, m)) return c;
            return degrevlex_range(a, b, m, a.size());
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block(" + std::to_string(block) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace(Monomial(ring_->size()), c);
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::size_t i) {
    return monomial(ring, Monomial::variable(ring->size(), i));
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::string_view name) {
    return variable(ring, ring->require(name));
}

MultiPoly MultiPoly::monomial(const RingPtr& ring, const Monomial& m, const Rational& c) {
    MultiPoly p(ring);
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
    if (!ring_) return 0;
    return coefficient(Monomial(ring_->size()));
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Exponent MultiPoly::degree_in(std::size_t var) const {
    Exponent d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.ring_ ? a.ring_ : b.ring_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [mm, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, x * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result(ring_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_ != o.terms_) return false;
    if (terms_.empty()) return true;
    return same_ring(ring_, o.ring_);
}

Monomial MultiPoly::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw PreconditionError("leading monomial of zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        if (order.compare(m, *best) > 0) best = &m;
    }
    return *best;
}

Rational MultiPoly::leading_coefficient(const MonomialOrder& order) const {
    return coefficient(leading_monomial(order));
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (!ring_ || var >= ring_->size()) throw PreconditionError("derivative: unknown variable");
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::string_view var) const { return derivative(ring_->require(var)); }

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (!ring_ || point.size() != ring_->size()) {
        throw PreconditionError("evaluate: point has " + std::to_string(point.size()) +
                                " coordinates, ring has " + std::to_string(ring_ ? ring_->size() : 0));
    }
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size() && t != 0; ++i) {
            for (Exponent k = 0; k < m[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images, const RingPtr& target) const {
    if (images.size() != ring_->size()) throw PreconditionError("substitute: image count mismatch");
    // Powers of each image are cached; substitutions here are low degree.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](std::size_t i, Exponent k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.emplace_back(target, 1);
        while (static_cast<Exponent>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        MultiPoly t(target, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] > 0) t *= power(i, m[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::substitute_value(std::size_t var, const Rational& c) const {
    MultiPoly r(ring_);
    for (const auto& [m, x] : terms_) {
        Rational t = x;
        for (Exponent k = 0; k < m[var]; ++k) t *= c;
        Monomial mm = m;
        mm[var] = 0;
        r.add_term(mm, t);
    }
    return r;
}

MultiPoly MultiPoly::rename_into(const RingPtr& target) const {
    std::vector<std::optional<std::size_t>> map(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->name(i));
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target->size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!map[i]) throw PreconditionError("variable '" + ring_->name(i) + "' missing in target ring");
            t[*map[i]] = m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    const auto grevlex = MonomialOrder::degrevlex();
    std::sort(order.begin(), order.end(),
              [&](auto* a, auto* b) { return grevlex.compare(a->first, b->first) > 0; });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.is_one() || c != 1) {
            os << equiblow::to_string(c);
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << '*';
            os << ring_->name(i);
            if (m[i] > 1) os << '^' << m[i];
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

    MultiPoly parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    MultiPoly expr() {
        MultiPoly p = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                p += term();
            } else if (peek('-')) {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = unary();
        while (peek('*')) {
            ++pos_;
            p *= unary();
        }
        return p;
    }

    MultiPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        MultiPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t at = pos_;
            if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", at);
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected exponent", at);
            if (digits.size() > 6) throw ParseError("exponent too large", at);
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    MultiPoly primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            // A '/' is only legal as part of a rational literal.
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::size_t at = pos_;
                std::string den = read_digits();
                if (den.empty()) throw ParseError("expected denominator", at);
                Integer d{den};
                if (d == 0) throw ParseError("zero denominator", at);
                Rational q{Integer{num}, d};
                q.canonicalize();
                return MultiPoly(ring_, q);
            }
            pos_ = save;
            return MultiPoly(ring_, Rational(Integer(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            std::string_view name = s_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) throw ParseError("undeclared variable '" + std::string(name) + "'", start);
            return MultiPoly::variable(ring_, *idx);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

// ---------------------------------------------------------------- division helpers

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw PreconditionError("division by zero polynomial");
    const auto order = MonomialOrder::lex();
    const Monomial lq = q.leading_monomial(order);
    const Rational cq = q.coefficient(lq);
    MultiPoly rem = p;
    MultiPoly quot(p.ring() ? p.ring() : q.ring());
    while (!rem.is_zero()) {
        Monomial lr = rem.leading_monomial(order);
        if (!lq.divides(lr)) return std::nullopt;
        Monomial m = lr / lq;
        Rational c = rem.coefficient(lr) / cq;
        quot.add_term(m, c);
        rem -= q.mul_monomial(m, c);
    }
    return quot;
}

Exponent min_exponent(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return 0;
    Exponent e = p.terms().begin()->first[var];
    for (const auto& [m, c] : p.terms()) e = std::min(e, m[var]);
    return e;
}

MultiPoly divide_by_variable(const MultiPoly& p, std::size_t var, Exponent k) {
    MultiPoly r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] < k) throw PreconditionError("divide_by_variable: term not divisible");
        Monomial d = m;
        d[var] -= k;
        r.add_term(d, c);
    }
    return r;
}

// ---------------------------------------------------------------- matrices

PolyMatrix zero_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols) {
    return PolyMatrix(rows, std::vector<MultiPoly>(cols, MultiPoly(ring)));
}

PolyMatrix identity_matrix(const RingPtr& ring, std::size_t n) {
    auto m = zero_matrix(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = MultiPoly(ring, 1);
    return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = a[0].size();
    if (inner != b.size()) throw PreconditionError("matrix product: dimension mismatch");
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    RingPtr ring = !a[0].empty() ? a[0][0].ring() : nullptr;
    PolyMatrix r(a.size(), std::vector<MultiPoly>(cols, MultiPoly(ring)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

PolyVector multiply(const PolyMatrix& a, const PolyVector& v) {
    PolyVector r;
    r.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != v.size()) throw PreconditionError("matrix-vector product: dimension mismatch");
        MultiPoly s(v.empty() ? nullptr : v[0].ring());
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!row[j].is_zero() && !v[j].is_zero()) s += row[j] * v[j];
        }
        r.push_back(std::move(s));
    }
    return r;
}

PolyMatrix transpose(const PolyMatrix& a) {
    if (a.empty()) return {};
    PolyMatrix t(a[0].size(), std::vector<MultiPoly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

bool is_zero(const PolyMatrix& a) {
    for (const auto& row : a) {
        if (!is_zero(row)) return false;
    }
    return true;
}

bool is_zero(const PolyVector& v) {
    return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

PolyMatrix jacobian(const PolyVector& components, std::span<const std::size_t> vars) {
    PolyMatrix j;
    j.reserve(components.size());
    for (const auto& c : components) {
        std::vector<MultiPoly> row;
        row.reserve(vars.size());
        for (auto v : vars) row.push_back(c.derivative(v));
        j.push_back(std::move(row));
    }
    return j;
}

}  // namespace equiblow
