#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcs/length_model.hpp"

namespace hcs {

/// Running-max envelope of a length model over one interval, anchored at a
/// maximizer: Max(l,[u,x]) left of the maximizer, Max(l,[x,v]) right of it.
/// Represented over the deepest-level intervals inside [u,v]; constant across
/// gaps (left value on the ascending side, right value on the descending
/// side, which is exactly what the two Max formulas give at finite depth).
struct BumpFunction {
    Interval interval;             // [u, v]
    Interval maximizer;            // deepest-level interval anchoring the max
    std::size_t first_leaf = 0;    // leaves inside [u, v], inclusive range
    std::size_t last_leaf = 0;
    std::size_t maximizer_leaf = 0;
    std::vector<Rat> envelope;     // bump value per leaf, envelope[i - first_leaf]
    std::vector<Rat> raw;          // underlying model values on the same leaves
    CantorPtr cantor;

    const Rat& max_value() const { return envelope[maximizer_leaf - first_leaf]; }

    /// Evaluate at any x in [u, v].
    Rat eval(const Rat& x) const;

    /// (x, value) pairs over the leaf endpoints, left to right.
    std::vector<std::pair<Rat, Rat>> breakpoints() const;
};

struct BumpReport {
    bool monotone_ok = false;
    std::optional<std::size_t> inversion_leaf;  // first offending leaf index
    Rat max_jump;             // largest |step| between consecutive bump values
    Rat underlying_max_jump;  // largest |step| between consecutive raw values
    bool jump_ok = false;     // max_jump <= underlying_max_jump

    bool passed() const { return monotone_ok && jump_ok; }
};

/// Builds the bump of `l` on `I` anchored at maximizer leaf `m` (global leaf
/// index). Throws ContractError when m does not attain max_over(l, I).
BumpFunction make_bump(const LengthModel& l, const Interval& I, std::size_t m);

/// Convenience: anchor at the leftmost maximizer.
BumpFunction make_bump(const LengthModel& l, const Interval& I);

/// Monotone-segment and discrete-continuity verification.
BumpReport verify_bump(const BumpFunction& b);

/// Bumps over every interval of a Cantor partition, zero outside.
struct PartitionBump {
    std::vector<BumpFunction> bumps;  // sorted by interval.lo

    /// 0 off the partition, otherwise the containing interval's bump value.
    Rat eval(const Rat& x) const;

    /// Finite-depth boundary condition: the first/last leaf value inside
    /// every partition interval must be <= bound.
    bool boundary_below(const Rat& bound) const;
};

PartitionBump make_partition_bump(const LengthModel& l,
                                  const std::vector<Interval>& partition);

/// CSV dump "x,value" of the breakpoints, for plotting.
std::string bump_breakpoints_csv(const BumpFunction& b);

}  // namespace hcs
