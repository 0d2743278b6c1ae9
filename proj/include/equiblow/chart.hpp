#pragma once

#include <string>
#include <vector>

#include "equiblow/linalg.hpp"
#include "equiblow/torus.hpp"

namespace equiblow {

/// One affine chart of the blowup of V along V^R.  The pivot moving
/// coordinate x_k becomes the exceptional coordinate xi, every other moving
/// x_i becomes T_i with x_i = xi * T_i, fixed coordinates are untouched.
/// Chart variables keep the parent's positional order.
struct BlowupChart {
    std::string name;
    RingPtr parent;
    RingPtr ring;
    Subtorus center;
    WeightMatrix parent_weights;
    WeightMatrix weights;  // induced: w(xi) = w_k, w(T_i) = w_i - w_k
    std::size_t pivot = 0;
    std::size_t xi = 0;    // chart index of the exceptional coordinate
    std::vector<bool> moving;   // per parent coordinate
    std::vector<MultiPoly> substitution;  // parent coordinate -> chart polynomial

    MultiPoly pullback(const MultiPoly& p) const;
    /// Chart index of the coordinate replacing parent coordinate i.
    std::size_t image(std::size_t i) const { return i; }
    const MultiPoly& exceptional() const { return substitution[pivot]; }
    std::vector<std::size_t> moving_indices() const;
    /// Parent point of a chart point.
    QVector map_point(std::span<const Rational> point) const;
};

/// One chart per moving coordinate, in coordinate order.
std::vector<BlowupChart> make_charts(const RingPtr& ring, const WeightMatrix& w, const Subtorus& r);

/// p / xi; raises TheoremCheckFailure when xi does not divide p.
MultiPoly exceptional_divide(const MultiPoly& p, const BlowupChart& chart);

struct IntrinsicIdeal {
    Ideal generators;      // un-normalised, one per graded piece
    GroebnerBasis basis;   // reduced, degrevlex
    std::size_t divisions = 0;  // moving pieces divided by xi
};

/// R-invariance of I: each graded piece of each generator lies in I.
bool is_invariant_ideal(const Ideal& ideal, const WeightMatrix& w, const Subtorus& r);

/// Pullbacks of fixed pieces together with pullback/xi of moving pieces.
IntrinsicIdeal intrinsic_ideal(const Ideal& ideal, const BlowupChart& chart);

/// Transition check between charts a and b on the overlap T_{a,b} != 0.
bool charts_glue(const Ideal& on_a, const BlowupChart& a, const Ideal& on_b, const BlowupChart& b);

}  // namespace equiblow
