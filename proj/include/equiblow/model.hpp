#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiblow/chart.hpp"

namespace equiblow {

/// Free equivariant bundle with a weighted frame.  `twist` counts the
/// multiple of E subtracted so far on this chart.
struct EquivariantBundle {
    std::vector<std::string> labels;
    std::vector<IntRow> weights;
    int twist = 0;

    std::size_t rank() const { return labels.size(); }
};

/// Frame elements moving under R get the label "xi*<label>" and weight
/// shifted by the weight of the exceptional coordinate.
EquivariantBundle blowup_bundle(const EquivariantBundle& f, const BlowupChart& chart);

/// Weak local model (U, V, F, omega, D, phi) on an affine chart.
///
/// phi is k x r and lives in the twisted frame of g^dual(-D): the untwisted
/// cofactor is divisor * phi.  psi (r x n, columns dx_i for the tangent
/// coordinates) records the factorisation phi * psi = sigma, where
/// sigma[a][i] = w[a][i] * x_i.  Models built from a bare ideal carry no
/// cofactor data.
struct LocalModel {
    RingPtr ring;
    WeightMatrix weights;
    std::optional<std::size_t> base;  // family parameter, weight zero
    EquivariantBundle bundle;
    PolyVector section;
    MultiPoly divisor;
    bool has_cofactor = false;
    PolyMatrix phi;
    PolyMatrix psi;
    std::vector<BlowupChart> ancestry;  // outermost first

    Ideal ideal() const { return Ideal(ring, section); }
    std::vector<std::size_t> tangent() const;
    PolyMatrix sigma() const;
};

/// d-critical chart (Crit f, V, Omega, df, 0, sigma).
LocalModel dcritical_chart(const MultiPoly& f, const WeightMatrix& w, std::optional<std::size_t> base = {});

/// Section given by weight-homogeneous ideal generators; no cofactor.
LocalModel ideal_model(const Ideal& ideal, const WeightMatrix& w, std::optional<std::size_t> base = {});

/// The same model seen by the subtorus R: weights, frame weights and the
/// rows of phi are multiplied by the cocharacter matrix.
LocalModel restrict_model(const LocalModel& m, const Subtorus& r);

struct ModelCheck {
    bool factorization = true;   // phi * psi = sigma
    bool cosection = true;       // phi * omega = 0
    bool isotropy = true;        // stabiliser rows of phi vanish on fixed loci
    bool weights = true;         // section components have weight -u_j
    std::vector<std::string> witnesses;

    bool ok() const { return factorization && cosection && isotropy && weights; }
};

ModelCheck check_weak_local_model(const LocalModel& m);

/// True iff a chart point with exactly `support` nonzero is semistable
/// through the whole ancestry.
bool support_semistable(const LocalModel& m, const std::vector<std::size_t>& support);

/// Charts of the blowup of m along V^R, built on the R-restricted weights
/// (the torus of the blown-up model is R).
std::vector<BlowupChart> model_charts(const LocalModel& m, const Subtorus& r);

/// Blowup of a model along V^R on one chart from model_charts(m, r).
/// The divisor gains 2E and phi is divided by xi^2 in the twisted frame.
LocalModel blowup_local_model(const LocalModel& m, const Subtorus& r, const BlowupChart& chart);

/// Blown-up section: moving components divided by xi.
PolyVector blowup_section(const LocalModel& m, const BlowupChart& chart);

}  // namespace equiblow
