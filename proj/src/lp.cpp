#include "equiblow/lp.hpp"

namespace equiblow {

std::optional<QVector> nonnegative_solution(const QMatrix& a, const QVector& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw PreconditionError("nonnegative_solution: shape mismatch");
    // Tableau [A | I | b] with artificials, rows sign-normalised so b >= 0.
    const std::size_t width = n + m + 1;
    std::vector<QVector> t(m, QVector(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a(i, j);
        t[i][n + i] = 1;
        t[i][width - 1] = s * b[i];
        basis[i] = n + i;
    }
    // Phase I objective: minimise the artificial sum; reduced costs in `z`.
    QVector z(width);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) z[j] -= t[i][j];
    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded is impossible for phase I
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (z[width - 1] != 0) return std::nullopt;
    QVector x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][width - 1];
    return x;
}

void LinearFeasibility::add(QVector coeffs, Rel rel, Rational rhs) {
    if (coeffs.size() != free_.size()) throw PreconditionError("linear constraint: wrong arity");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

std::optional<QVector> LinearFeasibility::solve() const {
    // Standard form: free x = p - q, one slack per inequality.
    const std::size_t nv = free_.size();
    std::vector<std::size_t> col_of(nv);
    std::size_t cols = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        col_of[v] = cols;
        cols += free_[v] ? 2 : 1;
    }
    const std::size_t base = cols;
    for (const auto& r : rows_)
        if (r.rel != Rel::Eq) ++cols;
    QMatrix a(rows_.size(), cols);
    QVector b(rows_.size());
    std::size_t slack = base;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        for (std::size_t v = 0; v < nv; ++v) {
            a(i, col_of[v]) = r.coeffs[v];
            if (free_[v]) a(i, col_of[v] + 1) = -r.coeffs[v];
        }
        if (r.rel == Rel::Ge) a(i, slack++) = -1;
        if (r.rel == Rel::Le) a(i, slack++) = 1;
        b[i] = r.rhs;
    }
    auto s = nonnegative_solution(a, b);
    if (!s) return std::nullopt;
    QVector x(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        x[v] = (*s)[col_of[v]];
        if (free_[v]) x[v] -= (*s)[col_of[v] + 1];
    }
    return x;
}

}  // namespace equiblow
