#pragma once

#include <array>
#include <string>
#include <vector>

#include "equiblow/linalg.hpp"
#include "equiblow/model.hpp"

namespace equiblow {

/// [g -> T_V|_U -> F_V|_U -> g^dual(-D)] at a rational point of U.
struct FourTermComplex {
    QVector point;
    QMatrix m0;  // n x k, column a = (w_{a,i} p_i)_i
    QMatrix m1;  // r x n, derivative of the section
    QMatrix m2;  // k x r, phi at p
    int twist = 0;
    bool m1m0_zero = false;
    bool m2m1_zero = false;
};

/// Raises PreconditionError when p is not on U or the model has no cofactor.
FourTermComplex four_term_at(const LocalModel& m, std::span<const Rational> point);

/// (h0, h1, h2, h3); raises TheoremCheckFailure if the compositions fail.
std::array<long, 4> cohomology_dims(const FourTermComplex& k);

struct ReducedObstruction {
    long dim = 0;
    bool orbit_not_closed = false;  // accepted with a warning
};

/// h2 at a point with finite stabiliser.
ReducedObstruction reduced_obstruction_dim(const LocalModel& m, std::span<const Rational> point);

/// Coordinates of a map Spec Q[e]/(e^m) -> U: series[i][j] is the e^j
/// coefficient of ring coordinate i, j < m.
struct SmallExtension {
    std::size_t m = 1;
    std::vector<QVector> series;

    QVector base_point() const;
};

struct ObstructionResult {
    QVector raw;        // e^m coefficient of omega(g'), in the frame of F
    QVector cls;        // coordinates in coker(M1) via a basis of ker(M1^T)
    std::size_t coker_dim = 0;
    bool vanishes = false;
};

/// Raises PreconditionError if g does not satisfy omega to order e^(m-1).
ObstructionResult obstruction_assignment(const LocalModel& m, const SmallExtension& ext);

/// Data of an Omega-equivalence: A, B are n x r (frame of F to tangent
/// coordinates), h a localisation hint.
struct OmegaData {
    PolyMatrix a;
    PolyMatrix b;
    MultiPoly hint;
};

struct OmegaReport {
    bool ideals = false;
    bool forward = false;    // omega - omega_bar - dOmega_bar A omega_bar in I^2
    bool backward = false;   // omega_bar - omega - dOmega B omega in I^2
    bool equivariant = false;
    std::vector<std::string> witnesses;

    bool ok() const { return ideals && forward && backward && equivariant; }
};

/// `m` provides the ring, weights, frame weights and omega.
OmegaReport verify_omega_equivalence(const LocalModel& m, const PolyVector& omega_bar, const OmegaData& data);

/// For potentials with g - f in (df)^2.  The result passes the verifier.
OmegaData construct_equivalence(const MultiPoly& f, const MultiPoly& g, const WeightMatrix& w);

/// A on the blowup chart in the blown-up frames.  m is the parent model
/// (already seen by the center torus), chart from model_charts.
PolyMatrix lift_morphism_to_blowup(const PolyMatrix& a, const LocalModel& m, const BlowupChart& chart);

struct PhiCk {
    std::size_t coker_small = 0;
    std::size_t coker_big = 0;
    bool well_defined = false;
    bool bijective = false;
};

/// Comparison of obstruction cokernels along V in W = V + aux at p in V.
PhiCk phi_ck_at_point(const LocalModel& small, const LocalModel& big, std::span<const Rational> point);

}  // namespace equiblow
