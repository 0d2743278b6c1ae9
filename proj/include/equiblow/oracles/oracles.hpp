#pragma once

// Brute-force references used to validate the main algorithms.  None of
// these share code with the LP, lattice or linear-algebra modules.

#include <cstdint>
#include <random>
#include <vector>

#include "equiblow/groebner.hpp"

namespace equiblow::oracle {

using Weights = std::vector<std::vector<long>>;  // one k-tuple per coordinate

/// Orbit of a point with this support is closed iff no cocharacter in the
/// box [-bound, bound]^k pairs >= 0 with every weight and > 0 with one.
bool orbit_closed_by_limits(const Weights& support_weights, std::size_t k, long bound = 6);

/// Fiber point is unstable iff some cocharacter in the box pairs > 0 with
/// every weight (t -> 0 drives the affine lift to the origin).
bool fiber_semistable_by_limits(const Weights& support_weights, std::size_t k, long bound = 6);

/// Fraction-free (Bareiss) rank over the integers after clearing denominators.
std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& m);

/// Exhaustive lift test: is there c in Q^n with g + c e^m satisfying every
/// generator of `ideal` modulo e^(m+1)?  Solved by its own elimination.
bool lift_exists(const Ideal& ideal, const std::vector<std::vector<Rational>>& series, std::size_t m);

/// Random polynomial, homogeneous of weight `target`, degree <= max_degree.
MultiPoly random_homogeneous(const RingPtr& ring, const Weights& columns, const std::vector<long>& target,
                             int max_degree, std::mt19937_64& rng, int terms = 3);

}  // namespace equiblow::oracle
