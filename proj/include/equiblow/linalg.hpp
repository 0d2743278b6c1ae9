#pragma once

#include <optional>
#include <vector>

#include "equiblow/poly.hpp"

namespace equiblow {

using QVector = std::vector<Rational>;

/// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<long>>& data);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const QMatrix&) const = default;
    std::vector<std::vector<std::string>> strings() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a);

std::size_t rank(const QMatrix& a);
/// Basis of {v : a v = 0}, one vector per free column.
std::vector<QVector> nullspace(const QMatrix& a);
/// Some x with a x = b, or nullopt.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
bool in_column_space(const QMatrix& a, const QVector& v);

/// Columns side by side; row counts must agree.
QMatrix hconcat(const QMatrix& a, const QMatrix& b);

/// Evaluates a polynomial matrix at a rational point.
QMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point, std::size_t rows, std::size_t cols);

}  // namespace equiblow
