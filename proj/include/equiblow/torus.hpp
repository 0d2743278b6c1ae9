#pragma once

#include <functional>
#include <string>
#include <vector>

#include "equiblow/groebner.hpp"
#include "equiblow/lattice.hpp"

namespace equiblow {

/// Weights of a diagonal torus of rank k acting on n coordinates; column i
/// is the weight of coordinate i.
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(IntMatrix rows, std::size_t n);

    std::size_t k() const { return w_.size(); }
    std::size_t n() const { return n_; }
    const IntMatrix& rows() const { return w_; }
    IntRow column(std::size_t i) const;
    long operator()(std::size_t a, std::size_t i) const { return w_[a][i]; }

    WeightMatrix select_columns(std::span<const std::size_t> cols) const;
    bool operator==(const WeightMatrix&) const = default;

private:
    IntMatrix w_;
    std::size_t n_ = 0;
};

/// Subtorus given by a primitive cocharacter basis in Hermite form.
class Subtorus {
public:
    Subtorus() = default;
    /// Validates primitivity and canonicalises.
    Subtorus(IntMatrix cochar, std::size_t k);
    static Subtorus full(std::size_t k);

    std::size_t dim() const { return cochar_.size(); }
    std::size_t ambient_rank() const { return k_; }
    const IntMatrix& cochar() const { return cochar_; }
    bool is_trivial() const { return cochar_.empty(); }
    /// Lambda * w.
    IntRow restrict(const IntRow& w) const;
    std::string to_string() const;

    bool operator==(const Subtorus&) const = default;
    auto operator<=>(const Subtorus&) const = default;

private:
    IntMatrix cochar_;
    std::size_t k_ = 0;
};

/// The weight matrix Lambda * W seen by R.
WeightMatrix restricted_weights(const WeightMatrix& w, const Subtorus& r);

IntRow monomial_weight(const Monomial& m, const WeightMatrix& w, const Subtorus& r);

struct GradedPiece {
    IntRow weight;
    MultiPoly part;
};

/// Pieces sorted by weight; their sum is p.
std::vector<GradedPiece> isotypic_decompose(const MultiPoly& p, const WeightMatrix& w, const Subtorus& r);
MultiPoly reynolds(const MultiPoly& p, const WeightMatrix& w, const Subtorus& r);
/// Weight of p if it is homogeneous (zero polynomial: nullopt).
std::optional<IntRow> homogeneous_weight(const MultiPoly& p, const WeightMatrix& w, const Subtorus& r);
bool is_invariant(const MultiPoly& p, const WeightMatrix& w);

/// Coordinates with nonzero restricted weight; V^R is cut out by them.
std::vector<std::size_t> moving_coordinates(const WeightMatrix& w, const Subtorus& r);

Subtorus stabilizer_subtorus(std::span<const std::size_t> support, const WeightMatrix& w);

/// 0 in the relative interior of conv{w_i : i in support}.
bool orbit_is_closed(std::span<const std::size_t> support, const WeightMatrix& w);
/// 0 in conv{weights}; `weights` nonempty.
bool zero_in_hull(const std::vector<IntRow>& weights);

/// Support S is realised by a point of V(I) with exactly the coordinates in
/// S nonzero.
bool support_realized(const Ideal& ideal, std::span<const std::size_t> support);

enum class Exec { Serial, Parallel };

struct CenterScan {
    std::vector<Subtorus> centers;   // decreasing dimension, then lexicographic
    std::vector<std::vector<std::size_t>> supports;  // realised closed-orbit supports
    bool dense = false;  // a nontrivial stabiliser acts trivially on a nonempty locus
};

using SupportFilter = std::function<bool(const std::vector<std::size_t>&)>;

/// Scans all 2^n supports.  `accept` is an optional extra predicate (for
/// example semistability on a blowup chart).
CenterScan enumerate_blowup_centers(const WeightMatrix& w, const Ideal& ideal, const SupportFilter& accept = {},
                                    Exec exec = Exec::Parallel);

std::string format_weight(const IntRow& w);

}  // namespace equiblow
