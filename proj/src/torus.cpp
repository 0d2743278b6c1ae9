#include "equiblow/torus.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>

#include "equiblow/lp.hpp"

namespace equiblow {

WeightMatrix::WeightMatrix(IntMatrix rows, std::size_t n) : w_(std::move(rows)), n_(n) {
    for (const auto& r : w_)
        if (r.size() != n) throw PreconditionError("weight matrix: row length differs from variable count");
}

IntRow WeightMatrix::column(std::size_t i) const {
    IntRow c;
    for (const auto& r : w_) c.push_back(r.at(i));
    return c;
}

WeightMatrix WeightMatrix::select_columns(std::span<const std::size_t> cols) const {
    IntMatrix rows(k());
    for (std::size_t a = 0; a < k(); ++a)
        for (auto c : cols) rows[a].push_back(w_[a].at(c));
    return WeightMatrix(std::move(rows), cols.size());
}

Subtorus::Subtorus(IntMatrix cochar, std::size_t k) : k_(k) {
    IntMatrix h = hermite_rows(cochar, k);
    if (h.size() != cochar.size()) throw PreconditionError("subtorus: cocharacter rows are dependent");
    if (!is_primitive(h, k)) throw PreconditionError("subtorus: cocharacter lattice is not saturated");
    cochar_ = std::move(h);
}

Subtorus Subtorus::full(std::size_t k) {
    IntMatrix id(k, IntRow(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    return Subtorus(id, k);
}

IntRow Subtorus::restrict(const IntRow& w) const {
    IntRow r;
    for (const auto& row : cochar_) {
        long s = 0;
        for (std::size_t a = 0; a < k_; ++a) s += row[a] * w.at(a);
        r.push_back(s);
    }
    return r;
}

std::string format_weight(const IntRow& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

std::string Subtorus::to_string() const {
    if (cochar_.empty()) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < cochar_.size(); ++i) s += (i ? "," : "") + format_weight(cochar_[i]);
    return s + "]";
}

WeightMatrix restricted_weights(const WeightMatrix& w, const Subtorus& r) {
    IntMatrix rows(r.dim(), IntRow(w.n(), 0));
    for (std::size_t i = 0; i < w.n(); ++i) {
        IntRow c = r.restrict(w.column(i));
        for (std::size_t a = 0; a < r.dim(); ++a) rows[a][i] = c[a];
    }
    return WeightMatrix(std::move(rows), w.n());
}

IntRow monomial_weight(const Monomial& m, const WeightMatrix& w, const Subtorus& r) {
    IntRow full(w.k(), 0);
    for (std::size_t a = 0; a < w.k(); ++a)
        for (std::size_t i = 0; i < w.n(); ++i) full[a] += w(a, i) * m[i];
    return r.restrict(full);
}

std::vector<GradedPiece> isotypic_decompose(const MultiPoly& p, const WeightMatrix& w, const Subtorus& r) {
    if (p.is_zero()) return {};
    if (p.ring()->size() != w.n()) throw PreconditionError("isotypic_decompose: weight matrix does not match ring");
    std::map<IntRow, MultiPoly> pieces;
    for (const auto& [m, c] : p.terms()) {
        auto [it, _] = pieces.try_emplace(monomial_weight(m, w, r), p.ring());
        it->second.add_term(m, c);
    }
    std::vector<GradedPiece> out;
    for (auto& [wt, part] : pieces) out.push_back({wt, std::move(part)});
    return out;
}

MultiPoly reynolds(const MultiPoly& p, const WeightMatrix& w, const Subtorus& r) {
    for (auto& piece : isotypic_decompose(p, w, r)) {
        if (std::all_of(piece.weight.begin(), piece.weight.end(), [](long x) { return x == 0; })) return piece.part;
    }
    return MultiPoly(p.ring());
}

std::optional<IntRow> homogeneous_weight(const MultiPoly& p, const WeightMatrix& w, const Subtorus& r) {
    auto pieces = isotypic_decompose(p, w, r);
    if (pieces.size() != 1) return std::nullopt;
    return pieces[0].weight;
}

bool is_invariant(const MultiPoly& p, const WeightMatrix& w) {
    return reynolds(p, w, Subtorus::full(w.k())) == p;
}

std::vector<std::size_t> moving_coordinates(const WeightMatrix& w, const Subtorus& r) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.n(); ++i) {
        IntRow c = r.restrict(w.column(i));
        if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; })) out.push_back(i);
    }
    return out;
}

Subtorus stabilizer_subtorus(std::span<const std::size_t> support, const WeightMatrix& w) {
    IntMatrix eqs;
    for (auto i : support) eqs.push_back(w.column(i));
    return Subtorus(integer_kernel(eqs, w.k()), w.k());
}

bool orbit_is_closed(std::span<const std::size_t> support, const WeightMatrix& w) {
    if (support.empty()) return true;
    // Exists c_i >= 1 with sum c_i w_i = 0; shift c = 1 + d.
    QMatrix a(w.k(), support.size());
    QVector b(w.k());
    for (std::size_t a_ = 0; a_ < w.k(); ++a_) {
        for (std::size_t j = 0; j < support.size(); ++j) {
            a(a_, j) = w(a_, support[j]);
            b[a_] -= w(a_, support[j]);
        }
    }
    return nonnegative_solution(a, b).has_value();
}

bool zero_in_hull(const std::vector<IntRow>& weights) {
    if (weights.empty()) throw PreconditionError("zero_in_hull: empty point set");
    const std::size_t k = weights[0].size();
    QMatrix a(k + 1, weights.size());
    QVector b(k + 1);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        for (std::size_t r = 0; r < k; ++r) a(r, j) = weights[j].at(r);
        a(k, j) = 1;
    }
    b[k] = 1;
    return nonnegative_solution(a, b).has_value();
}

bool support_realized(const Ideal& ideal, std::span<const std::size_t> support) {
    const RingPtr& ring = ideal.ring();
    std::vector<bool> in(ring->size(), false);
    for (auto i : support) in.at(i) = true;
    std::vector<MultiPoly> images;
    MultiPoly prod(ring, 1);
    for (std::size_t i = 0; i < ring->size(); ++i) {
        images.push_back(in[i] ? MultiPoly::variable(ring, i) : MultiPoly(ring));
        if (in[i]) prod *= MultiPoly::variable(ring, i);
    }
    Ideal restricted(ring);
    for (const auto& g : ideal.generators()) restricted.add(g.substitute(images, ring));
    if (restricted.empty()) return true;
    if (is_unit_ideal(restricted)) return false;
    if (support.empty()) return true;
    return !is_unit_ideal(saturate(restricted, prod));
}

namespace {

struct SupportResult {
    bool keep = false;
    Subtorus stabilizer;
    bool acts_trivially = false;
};

SupportResult examine(const WeightMatrix& w, const Ideal& ideal, const SupportFilter& accept, unsigned long mask) {
    SupportResult res;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < w.n(); ++i)
        if (mask >> i & 1UL) support.push_back(i);
    if (!orbit_is_closed(support, w)) return res;
    Subtorus r = stabilizer_subtorus(support, w);
    if (r.is_trivial()) return res;
    if (accept && !accept(support)) return res;
    if (!support_realized(ideal, support)) return res;
    res.keep = true;
    res.acts_trivially = moving_coordinates(w, r).empty();
    res.stabilizer = std::move(r);
    return res;
}

}  // namespace

CenterScan enumerate_blowup_centers(const WeightMatrix& w, const Ideal& ideal, const SupportFilter& accept,
                                    Exec exec) {
    if (w.n() > 16) throw BudgetExceeded("support scan over more than 16 coordinates");
    if (ideal.ring()->size() != w.n()) throw PreconditionError("center scan: weight matrix does not match ring");
    const unsigned long total = 1UL << w.n();
    std::vector<SupportResult> results(total);
    if (exec == Exec::Serial) {
        for (unsigned long mask = 0; mask < total; ++mask) results[mask] = examine(w, ideal, accept, mask);
    } else {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (long mask = 0; mask < static_cast<long>(total); ++mask) {
            try {
                results[mask] = examine(w, ideal, accept, static_cast<unsigned long>(mask));
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    CenterScan scan;
    for (unsigned long mask = 0; mask < total; ++mask) {
        const auto& r = results[mask];
        if (!r.keep) continue;
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < w.n(); ++i)
            if (mask >> i & 1UL) support.push_back(i);
        scan.supports.push_back(support);
        if (r.acts_trivially) {
            scan.dense = true;
            continue;
        }
        if (std::find(scan.centers.begin(), scan.centers.end(), r.stabilizer) == scan.centers.end())
            scan.centers.push_back(r.stabilizer);
    }
    std::sort(scan.centers.begin(), scan.centers.end(), [](const Subtorus& a, const Subtorus& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a.cochar() < b.cochar();
    });
    return scan;
}

}  // namespace equiblow
