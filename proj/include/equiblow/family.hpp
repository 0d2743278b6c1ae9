#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equiblow/model.hpp"

namespace equiblow {

/// Fiber over t = c: substitutes the base parameter and drops it.
LocalModel specialize(const LocalModel& m, const Rational& c);
MultiPoly specialize(const MultiPoly& p, std::size_t base, const Rational& c, const RingPtr& target);

/// V^G is cut out by the moving coordinates alone, so it is a coordinate
/// subspace times the base.  `certificate` receives a one-line description.
bool check_fixed_locus_flat(const LocalModel& m, std::string* certificate = nullptr);

/// Per chart of the first center: intrinsic ideal and blowup section commute
/// with restriction to the fiber t = c.
std::vector<std::pair<std::string, bool>> fiber_blowup_commutes(const LocalModel& m, const Rational& c);

}  // namespace equiblow
