#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equiblow/model.hpp"
#include "equiblow/stability.hpp"

namespace equiblow {

struct Stage;

struct ChartResult {
    BlowupChart chart;
    LocalModel model;
    IntrinsicIdeal intrinsic;             // from the reduced basis of the parent ideal
    bool coinc = false;                   // section ideal equals the intrinsic ideal
    std::optional<GroebnerBasis> unstable;  // rank-one tori only
    std::optional<ModelCheck> check;
    std::vector<Stage> children;
};

struct Stage {
    Subtorus center;
    std::size_t depth = 0;
    std::vector<ChartResult> charts;
};

struct Desingularization {
    std::vector<Stage> stages;   // at most one top-level stage; the rest hang off charts
    bool dense = false;          // a nontrivial subtorus fixes all of U
    std::size_t divisions = 0;   // exceptional divisions performed
};

/// Section ideal of the blown-up model against the intrinsic ideal computed
/// from a different generating set (the reduced basis of I_U).
bool verify_coinc(const LocalModel& m, const Subtorus& r, const BlowupChart& chart);
std::vector<std::pair<std::string, bool>> verify_coinc(const LocalModel& m, const Subtorus& r);

struct DesingOptions {
    bool recurse = true;
    bool check_models = true;
    std::size_t max_depth = 6;
};

/// Blows up the largest center, then recurses into every chart until no
/// nontrivial stabiliser of a closed semistable orbit remains.
Desingularization partial_desingularization(const LocalModel& m, const DesingOptions& opt = {});

/// Intrinsic ideals of a re-embedding (extra weight-zero coordinates `aux`)
/// agree with the original after eliminating the auxiliary coordinates.
std::vector<std::pair<std::string, bool>> embedding_independence_check(const Ideal& small, const WeightMatrix& w_small,
                                                                       const Ideal& big, const WeightMatrix& w_big,
                                                                       const std::vector<std::string>& aux);

}  // namespace equiblow
