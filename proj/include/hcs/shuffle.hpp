#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hcs/length_model.hpp"

namespace hcs {

struct ShuffleCheck {
    std::size_t block = 0;  // level-m block index (global)
    Rat value;
    Rat bound;
    bool ok = false;
};

/// One stage of the shuffle normalization: block permutations sigma_j per
/// level-m_{n-1} parent, per-block translation offsets, and the exact
/// certificates for the stage conditions
///   (iii) boundary-block maxima < 1/n,
///   (iv)  adjacent-block max gaps < 1/n,
/// plus the displacement bound sup|H_n - id| <= 3^-m_{n-1}.
struct ShuffleStage {
    int stage = 0;   // n
    int m_prev = 0;  // m_{n-1}
    int m = 0;       // m_n
    /// sigma[j][p] = source block (0-based, within parent j) whose content
    /// lands at position p; each sigma_j permutes K(m; m_prev, j).
    std::vector<std::vector<int>> sigma;
    /// offsets[j][p] = translation applied to that source block.
    std::vector<std::vector<Rat>> offsets;
    Rat sup_displacement;
    Rat displacement_bound;  // 3^-m_prev
    std::vector<ShuffleCheck> boundary_checks;
    std::vector<ShuffleCheck> adjacent_checks;

    bool conditions_ok() const;
};

struct ShuffleRunReport {
    std::vector<int> m_sequence;
    std::vector<Rat> stage_displacements;
    bool displacements_within_bounds = false;
    Rat final_boundary_max;    // Step 1(iii) at the last stage
    Rat final_boundary_bound;  // 1/S
    bool final_boundary_ok = false;
    /// check_shcs_definition verdict on the final model (informational: a
    /// finite number of stages certifies the stage inequalities, not the
    /// limit property).
    bool shcs_passed = false;
};

struct ShuffleStageResult {
    ShuffleStage stage;
    LengthModel model;  // l_n = l_{n-1} o H_n^{-1}
};

/// Runs one stage: picks m_n as the smallest level > m_prev whose block
/// maxima form a 1/(4n)-net of [0, Max] within every level-m_prev parent,
/// sorts each parent's blocks ascending and interleaves them by the pattern
/// (1, 3, 5, ..., 6, 4, 2), then translates blocks accordingly. Throws
/// ResourceError when no level satisfies the net condition.
ShuffleStageResult shuffle_stage(const LengthModel& l, int n, int m_prev);

struct ShuffleRunResult {
    LengthModel model;
    std::vector<ShuffleStage> stages;
    ShuffleRunReport report;
};

ShuffleRunResult shuffle_run(const LengthModel& l, int stages);

}  // namespace hcs
