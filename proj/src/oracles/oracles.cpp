#include "equiblow/oracles/oracles.hpp"

#include <algorithm>

namespace equiblow::oracle {

namespace {

template <typename F>
bool any_cocharacter(std::size_t k, long bound, F&& pred) {
    std::vector<long> lam(k, -bound);
    if (k == 0) return pred(lam);
    for (;;) {
        if (pred(lam)) return true;
        std::size_t i = 0;
        while (i < k && lam[i] == bound) lam[i++] = -bound;
        if (i == k) return false;
        ++lam[i];
    }
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

bool orbit_closed_by_limits(const Weights& ws, std::size_t k, long bound) {
    bool escapes = any_cocharacter(k, bound, [&](const std::vector<long>& lam) {
        bool some_positive = false;
        for (const auto& w : ws) {
            long p = dot(lam, w);
            if (p < 0) return false;
            if (p > 0) some_positive = true;
        }
        return some_positive;
    });
    return !escapes;
}

bool fiber_semistable_by_limits(const Weights& ws, std::size_t k, long bound) {
    bool unstable = any_cocharacter(k, bound, [&](const std::vector<long>& lam) {
        return std::all_of(ws.begin(), ws.end(), [&](const auto& w) { return dot(lam, w) > 0; });
    });
    return !unstable;
}

std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den = 1;
        for (const auto& x : m[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].get_num() * (den / m[i][j].get_den());
    }
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

bool lift_exists(const Ideal& ideal, const std::vector<std::vector<Rational>>& series, std::size_t m) {
    const RingPtr& ring = ideal.ring();
    const std::size_t n = ring->size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    names.push_back("e");
    RingPtr big = make_ring(names);
    MultiPoly e = MultiPoly::variable(big, n);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly g(big);
        for (std::size_t j = 0; j < series[i].size(); ++j) g += e.pow(static_cast<unsigned>(j)) * series[i][j];
        g += MultiPoly::variable(big, i) * e.pow(static_cast<unsigned>(m));
        images.push_back(std::move(g));
    }
    // Rows: coefficient of e^m of each generator, affine in c.
    std::vector<std::vector<Rational>> rows;
    for (const auto& gen : buchberger(ideal).basis) {
        MultiPoly v = gen.substitute(images, big);
        std::vector<Rational> row(n + 1);
        for (const auto& [mono, coeff] : v.terms()) {
            if (mono[n] < static_cast<Exponent>(m)) {
                if (mono.degree() == mono[n]) return false;  // g itself fails below order m
                continue;
            }
            if (mono[n] != static_cast<Exponent>(m)) continue;
            long cdeg = mono.degree() - mono[n];
            if (cdeg == 0) row[n] += coeff;
            else if (cdeg == 1) {
                for (std::size_t i = 0; i < n; ++i)
                    if (mono[i] == 1) row[i] += coeff;
            }
        }
        rows.push_back(std::move(row));
    }
    // Gauss-Jordan on [M | -b]: consistent iff no row reads 0 = nonzero.
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j <= n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][n] != 0) return false;
    return true;
}

MultiPoly random_homogeneous(const RingPtr& ring, const Weights& columns, const std::vector<long>& target,
                             int max_degree, std::mt19937_64& rng, int terms) {
    const std::size_t n = ring->size();
    std::vector<Monomial> pool;
    Monomial cur(n);
    // All monomials of degree <= max_degree with the target weight.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == n) {
            std::vector<long> w(target.size(), 0);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t a = 0; a < target.size(); ++a) w[a] += columns[v][a] * cur[v];
            if (w == target && cur.degree() > 0) pool.push_back(cur);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            cur[i] = d;
            self(self, i + 1, left - d);
        }
        cur[i] = 0;
    };
    rec(rec, 0, max_degree);
    MultiPoly p(ring);
    if (pool.empty()) return p;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(pool[pick(rng)], c);
    }
    return p;
}

}  // namespace equiblow::oracle
