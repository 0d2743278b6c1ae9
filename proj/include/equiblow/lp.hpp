#pragma once

#include <optional>
#include <vector>

#include "equiblow/linalg.hpp"

namespace equiblow {

/// Exact feasibility for small linear systems over Q.  Variables are
/// nonnegative unless marked free; constraints are =, >= or <=.
class LinearFeasibility {
public:
    enum class Rel { Eq, Ge, Le };

    explicit LinearFeasibility(std::size_t vars) : free_(vars, false) {}

    void set_free(std::size_t var) { free_.at(var) = true; }
    void add(QVector coeffs, Rel rel, Rational rhs);

    /// A feasible point, or nullopt.  Two-phase simplex with Bland's rule.
    std::optional<QVector> solve() const;

private:
    struct Row {
        QVector coeffs;
        Rel rel;
        Rational rhs;
    };
    std::vector<bool> free_;
    std::vector<Row> rows_;
};

/// Some x >= 0 with a x = b, or nullopt.
std::optional<QVector> nonnegative_solution(const QMatrix& a, const QVector& b);

}  // namespace equiblow
