#pragma once

#include <optional>
#include <vector>

#include "equiblow/poly.hpp"

namespace equiblow {

using IntRow = std::vector<long>;
using IntMatrix = std::vector<IntRow>;

/// Row Hermite normal form of the lattice spanned by the rows: positive
/// pivots, entries above each pivot reduced into [0, pivot), zero rows dropped.
IntMatrix hermite_rows(const IntMatrix& rows, std::size_t cols);

/// Basis (as rows) of {x in Z^cols : a x = 0}.  The basis spans a saturated
/// sublattice and is returned in Hermite form.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// True iff the row lattice is saturated in Z^cols (unit elementary divisors).
bool is_primitive(const IntMatrix& rows, std::size_t cols);

}  // namespace equiblow
