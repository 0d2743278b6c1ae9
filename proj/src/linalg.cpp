#include "equiblow/linalg.hpp"

namespace equiblow {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<long>>& data)
    : QMatrix(rows, cols) {
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = data.at(i).at(j);
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<std::string>> QMatrix::strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols() != v.size()) throw PreconditionError("matrix-vector product: shape mismatch");
    QVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const QMatrix& a) {
    QMatrix c = a;
    return rref(c).size();
}

std::vector<QVector> nullspace(const QMatrix& a) {
    QMatrix c = a;
    auto pivots = rref(c);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw PreconditionError("solve: shape mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    QVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

bool in_column_space(const QMatrix& a, const QVector& v) { return solve(a, v).has_value(); }

QMatrix hconcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hconcat: row mismatch");
    QMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

QMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point, std::size_t rows, std::size_t cols) {
    QMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j].evaluate(point);
    return out;
}

}  // namespace equiblow
