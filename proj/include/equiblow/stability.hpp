#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiblow/chart.hpp"

namespace equiblow {

struct StabilityVerdict {
    bool semistable = true;
    std::optional<IntRow> lambda;    // destabilising cocharacter of the stage torus
    std::optional<QVector> limit;    // limit point on the chart, when it lies there
    std::size_t stage = 0;           // ancestry level that decided instability
    std::string reason;
};

/// Hilbert-Mumford on a fiber point: 0 in the convex hull of its weights.
bool hm_fiber_semistable(const std::vector<IntRow>& support_weights);

/// lim_{t->0} lambda(t) . point, if it exists in the chart.
std::optional<QVector> one_ps_limit(std::span<const Rational> point, const IntRow& lambda, const WeightMatrix& w);

/// Verdict for one blowup step: on E the fiber test, off E the orbit
/// closure test against the unstable part of E.
StabilityVerdict chart_point_semistable(std::span<const Rational> point, const BlowupChart& chart);

/// Verdict through a tower of blowups (outermost chart first); a point is
/// semistable iff it is semistable at every level.
StabilityVerdict point_semistable(std::span<const Rational> point, std::span<const BlowupChart> ancestry);

/// Unstable ideal of one chart, rank-one tori only.  The zero ideal means
/// the whole chart is unstable, the unit ideal that nothing is.
Ideal unstable_ideal(const BlowupChart& chart);
/// Unstable ideal of the last chart of a tower, including preimages of the
/// unstable loci of earlier levels.
Ideal unstable_ideal(std::span<const BlowupChart> ancestry);

struct SemistableLocus {
    GroebnerBasis scheme;
    GroebnerBasis unstable;

    bool contains(std::span<const Rational> point) const;
};

SemistableLocus semistable_locus(const Ideal& intrinsic, std::span<const BlowupChart> ancestry);

}  // namespace equiblow
