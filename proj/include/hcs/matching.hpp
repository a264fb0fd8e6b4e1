#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcs/length_model.hpp"

namespace hcs {

/// One interval of a matched partition level: the X-side and Y-side leaf
/// ranges (inclusive), the parent index at the previous level, the interval
/// maxima of both sides, and the recorded ratio
///   r = (Max(l^Y, J^Y)/Max(l^Y, parent^Y)) / (Max(l^X, J^X)/Max(l^X, parent^X)).
struct NestBlock {
    std::size_t x_first = 0, x_last = 0;
    std::size_t y_first = 0, y_last = 0;
    std::size_t parent = 0;
    Rat max_x;
    Rat max_y;
    Rat ratio;  // 1 at level 0 by convention
};

/// Raised when the finite gap structure cannot realize a required cut. On the
/// true Cantor set the cut exists by continuity of the bump value; at finite
/// depth the achievable ratio set is finite, so the failure is reported
/// rather than hidden.
struct MatchingError : std::runtime_error {
    MatchingError(int level, const Rat& target, const std::string& what)
        : std::runtime_error(what), level_reached(level), target_ratio(target) {}
    int level_reached;
    Rat target_ratio;
};

/// Parallel nests of Cantor partitions for two straight-hairy models on the
/// same Cantor approximation:
///   (i)  every level-n interval has diameter < 2^-n |C|,
///   (ii) identical containment pattern on both sides,
///   (iii) every recorded ratio lies in (1 - 2^-(n+2), 1 + 2^-(n+2)).
class MatchedNestPair {
  public:
    MatchedNestPair(LengthModel lx, LengthModel ly,
                    std::vector<std::vector<NestBlock>> levels)
        : lx_(std::move(lx)), ly_(std::move(ly)), levels_(std::move(levels)) {}

    const LengthModel& lx() const { return lx_; }
    const LengthModel& ly() const { return ly_; }
    int level_count() const { return static_cast<int>(levels_.size()); }
    const std::vector<NestBlock>& level(int n) const { return levels_.at(n); }
    const std::vector<std::vector<NestBlock>>& levels() const { return levels_; }

    Interval x_interval(const NestBlock& b) const {
        const auto& lv = lx_.cantor().leaves();
        return Interval{lv[b.x_first].lo, lv[b.x_last].hi};
    }
    Interval y_interval(const NestBlock& b) const {
        const auto& lv = ly_.cantor().leaves();
        return Interval{lv[b.y_first].lo, lv[b.y_last].hi};
    }

    /// Recomputes every stored Max from raw leaf values and every ratio from
    /// the recomputed maxima; verifies the diameter, containment and ratio
    /// window invariants exactly. Returns the number of blocks checked.
    std::size_t verify(bool check_windows = true) const;

  private:
    LengthModel lx_;
    LengthModel ly_;
    std::vector<std::vector<NestBlock>> levels_;
};

/// Builds the matched nests down to level N (level 0 is [inf C, sup C] on
/// both sides). On even n the Y side refines freely (greedy minimal blocks
/// under the 2^-(n+2)|C| diameter bound, cutting only at gaps) and X is
/// fitted by the discrete intermediate-value cut search; on odd n the roles
/// swap. The cut search picks, among cuts whose ratio lands in the open
/// window, the one with ratio closest to 1 (ties: nearest the free-side cut
/// index, then first in scan order), which makes the construction
/// deterministic and reproduces identical nests for identical inputs.
MatchedNestPair build_matched_nests(const LengthModel& lx, const LengthModel& ly, int N);

/// Order-preserving endpoint correspondence psi(u^X_{n,i}) = u^Y_{n,i},
/// psi(v^X_{n,i}) = v^Y_{n,i}, extended by monotone piecewise-linear
/// interpolation (identity outside the recorded range).
struct EndpointMap {
    std::vector<std::pair<Rat, Rat>> pairs;  // strictly increasing in both slots

    Rat eval(const Rat& x) const;
};

EndpointMap base_psi(const MatchedNestPair& pair);

}  // namespace hcs
