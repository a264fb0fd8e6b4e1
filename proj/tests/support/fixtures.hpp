#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hcs/height.hpp"
#include "hcs/length_model.hpp"

namespace hcs::fixtures {

/// Seeded perturbation of a model: values multiplied by interval-dependent
/// factors f(leaf) = 1 + alpha + beta * l(leaf), all inside [0.9, 1.1].
/// Because f is increasing in the value, Max transforms exactly under the
/// perturbation, which keeps every matched-nest ratio window reachable at
/// finite depth.
inline LengthModel perturbed(const LengthModel& base, unsigned seed) {
    std::mt19937 rng(seed);
    // alpha in [-1/20, 1/20] on a 1/10240 grid; beta in {1/1024, 1/512}
    const Rat alpha = rat(static_cast<long>(rng() % 1025) - 512, 10240);
    const Rat beta(1, rng() % 2 == 0 ? 1024 : 512);
    std::vector<Rat> vals;
    vals.reserve(base.leaf_count());
    for (std::size_t i = 0; i < base.leaf_count(); ++i)
        vals.push_back(base.value(i) * (1 + alpha + beta * base.value(i)));
    return LengthModel::from_values(base.cantor_ptr(), std::move(vals));
}

/// Seeded usc-style model on the middle-third approximation at depth 8:
/// a stratified cascade (4 level-2 block targets, 8 level-5 parent maxima
/// per block, 8 leaf values per parent covering [0, parent max]), with
/// seeded jitter and seeded within-parent permutations. The stratification
/// makes the 1/(4n)-net conditions of three shuffle stages satisfiable.
inline LengthModel stratified_usc_model(unsigned seed) {
    constexpr int kDepth = 8;
    std::mt19937 rng(seed);
    auto uniform = [&](long lo, long hi) {  // inclusive
        return static_cast<long>(lo + static_cast<long>(rng() % (hi - lo + 1)));
    };

    std::vector<Rat> targets = {Rat(3, 20), Rat(3, 10), Rat(1, 2), Rat(13, 20)};
    std::shuffle(targets.begin(), targets.end(), rng);

    CantorPtr cantor = make_cantor(Scheme::MiddleThird, kDepth);
    std::vector<Rat> vals(cantor->leaf_count());
    for (int b = 0; b < 4; ++b) {
        const Rat tb = targets[b];
        const Rat lo = std::min(Rat(1, 9), Rat(tb / 8));
        std::vector<Rat> parent_max(8);
        for (int k = 0; k < 8; ++k) {
            if (k == 7)
                parent_max[k] = tb;
            else if (k == 0)
                parent_max[k] = lo * rat(uniform(90, 99), 100);
            else
                parent_max[k] = lo + (tb - lo) * (Rat(k) + rat(uniform(0, 50), 100)) / 8;
        }
        std::shuffle(parent_max.begin(), parent_max.end(), rng);
        for (int p = 0; p < 8; ++p) {
            const Rat mp = parent_max[p];
            std::vector<Rat> leaf(8);
            for (int k = 1; k <= 8; ++k) {
                if (k == 8)
                    leaf[k - 1] = mp;
                else if (k == 1)
                    leaf[k - 1] = mp / 9 * rat(uniform(90, 100), 100);
                else
                    leaf[k - 1] = mp * (Rat(k) + rat(uniform(0, 40), 100)) / 9;
            }
            std::shuffle(leaf.begin(), leaf.end(), rng);
            for (int k = 0; k < 8; ++k) vals[(b * 64 + p * 8) + k] = leaf[k];
        }
    }
    return LengthModel::from_values(std::move(cantor), std::move(vals));
}

/// Seeded finite metric space: n points on a rational grid with the L1
/// (taxicab) metric, which keeps distances exact; coordinates are drawn
/// until all points are distinct.
inline FiniteMetricSpace seeded_l1_space(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<Rat, Rat>> pts;
    while (pts.size() < n) {
        std::pair<Rat, Rat> p{rat(rng() % 128, 64), rat(rng() % 128, 64)};
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(std::move(p));
    }
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i][j] = rat_abs(pts[i].first - pts[j].first) +
                      rat_abs(pts[i].second - pts[j].second);
    return FiniteMetricSpace(std::move(d));
}

/// Seeded hair data: `chains` chains over consecutive point indices with
/// seeded lengths between 1 and max_len.
inline AbstractHairData seeded_chains(std::size_t point_count, std::size_t max_len,
                                      unsigned seed) {
    std::mt19937 rng(seed);
    AbstractHairData d;
    std::size_t next = 0;
    while (next < point_count) {
        std::size_t len = 1 + rng() % max_len;
        len = std::min(len, point_count - next);
        std::vector<std::size_t> chain(len);
        for (std::size_t i = 0; i < len; ++i) chain[i] = next + i;
        d.chains.push_back(std::move(chain));
        next += len;
    }
    return d;
}

}  // namespace hcs::fixtures
