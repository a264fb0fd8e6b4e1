#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcs/cantor.hpp"

namespace hcs {

/// Continuous piecewise-linear function on [0,1], constant outside.
struct PiecewiseLinear {
    std::vector<std::pair<Rat, Rat>> points;  // (x, value), x strictly increasing

    Rat eval(const Rat& x) const;
};

struct PeakDensityStats {
    Rat sup;
    Rat max_gap;
};

struct UscLimitReport {
    Address address;
    std::vector<Rat> sequence;  // Max(l, I_prefix_k) for k = 1..n
    bool nonincreasing = false;
    bool final_matches_value = false;
    int first_violation_level = -1;  // 1-based prefix length, -1 if none

    bool passed() const { return nonincreasing && final_matches_value; }
};

/// Decay schedules for the finite-depth straight-hairy checks. When a
/// constant is not given it is calibrated from the witness at `start_level`
/// as C = start_level * witness(start_level).
struct ShcsSchedule {
    int start_level = 3;
    std::optional<Rat> boundary_constant;  // check (ii)
    std::optional<Rat> interior_constant;  // check (iii)
};

struct ShcsWitness {
    int level = -1;
    std::size_t index = 0;
    Rat value;
    Rat bound;
};

struct ShcsReport {
    // (i) every deepest interval carries a positive value
    bool positivity_ok = false;
    std::optional<std::size_t> zero_leaf;  // leaf index of first violation

    // (ii) boundary-chain interval maxima decay like C/n
    bool boundary_decay_ok = false;
    Rat boundary_constant;
    std::vector<ShcsWitness> boundary_witnesses;  // worst witness per level
    std::optional<ShcsWitness> boundary_failure;

    // (iii) neighbor maxima at the maximizer approach the max like C/n
    bool interior_limsup_ok = false;
    Rat interior_constant;
    std::vector<ShcsWitness> interior_witnesses;
    std::optional<ShcsWitness> interior_failure;

    bool passed() const { return positivity_ok && boundary_decay_ok && interior_limsup_ok; }
};

/// Finite-depth model of a length function l: C -> [0, inf): one exact value
/// per deepest-level interval plus the interval maxima of every level.
/// Immutable after construction; safe to share across threads.
class LengthModel {
  public:
    /// The canonical example: value at address (i_1..i_n) is
    /// prod_j (1 - |i_j/j - 1|), computed exactly.
    static LengthModel canonical(int depth);

    /// Builds from per-leaf values; interval maxima are computed bottom-up.
    static LengthModel from_values(CantorPtr cantor, std::vector<Rat> values);

    /// Unchecked construction from raw maps (negative-test fixtures only).
    static LengthModel from_raw(CantorPtr cantor, std::vector<Rat> values,
                                std::vector<std::vector<Rat>> interval_max);

    const CantorApprox& cantor() const { return *cantor_; }
    CantorPtr cantor_ptr() const { return cantor_; }
    int depth() const { return cantor_->depth(); }
    std::size_t leaf_count() const { return values_.size(); }

    const std::vector<Rat>& values() const { return values_; }
    const Rat& value(std::size_t leaf) const { return values_[leaf]; }
    const Rat& value_at(const Address& a) const;

    const std::vector<std::vector<Rat>>& interval_max() const { return interval_max_; }
    const Rat& interval_max_at(int level, std::size_t index) const {
        return interval_max_[level][index];
    }

    /// Exact maximum of leaf values over the leaves of [first, last].
    Rat range_max(std::size_t first, std::size_t last) const;
    /// Leftmost leaf index in [first, last] attaining range_max.
    std::size_t range_argmax(std::size_t first, std::size_t last) const;

    /// Max(l, I) over deepest-level intervals contained in I, plus the
    /// leftmost interval attaining it. Throws DomainError when no deepest
    /// interval lies inside I.
    std::pair<Rat, Interval> max_over(const Interval& I) const;
    std::pair<Rat, std::size_t> max_over_leaf(const Interval& I) const;

    /// Leaves fully contained in I, as an inclusive index range.
    std::optional<std::pair<std::size_t, std::size_t>> leaves_in(const Interval& I) const;

    /// Finite-depth membership in X = {(x,y) : x in C, 0 <= y <= l(x)}:
    /// x must lie in a deepest-level interval and y in [0, value].
    bool contains_point(const Rat& x, const Rat& y) const;

    UscLimitReport check_usc_limit(const Address& a) const;

    PeakDensityStats peak_density_stats() const;

    ShcsReport check_shcs_definition(const ShcsSchedule& schedule = {}) const;

    /// Recomputes every interval max bottom-up from the leaf values
    /// (self-consistency oracle for from_raw models).
    std::vector<std::vector<Rat>> recompute_interval_max() const;

  private:
    LengthModel() = default;

    CantorPtr cantor_;
    std::vector<Rat> values_;
    std::vector<std::vector<Rat>> interval_max_;
};

/// l_n at a canonical address: prod_{j<=|a|} (1 - |i_j/j - 1|), exact.
Rat canonical_length(const Address& a);

/// The continuous piecewise-linear l_n of the canonical example: constant on
/// each level-n cell (value = canonical_length of its address), linear across
/// gaps, constant outside [0,1]. `layout` picks the cell coordinates; the
/// published figure uses AddressUniform.
PiecewiseLinear canonical_graph(int n, XLayout layout = XLayout::TrueCantor);

}  // namespace hcs
