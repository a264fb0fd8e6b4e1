#include "hcs/matching.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hcs {

namespace {

struct LeafRange {
    std::size_t first;
    std::size_t last;
};

// Greedy split of [range] into the minimal number of contiguous leaf blocks
// whose hulls stay strictly below `bound`, cutting only at gaps.
std::vector<LeafRange> free_split(const std::vector<Interval>& leaves, LeafRange range,
                                  const Rat& bound, int level) {
    std::vector<LeafRange> out;
    std::size_t start = range.first;
    for (std::size_t k = range.first; k <= range.last; ++k) {
        if (leaves[k].hi - leaves[start].lo >= bound) {
            if (k == start)
                throw MatchingError(level, Rat(0),
                                    "a single deepest interval exceeds the diameter bound");
            out.push_back({start, k - 1});
            start = k;
        }
    }
    out.push_back({start, range.last});
    return out;
}

struct CutChoice {
    std::size_t cut;
    Rat ratio;
};

std::size_t index_distance(std::size_t a, std::size_t b) { return a < b ? b - a : a - b; }

// Among in-window cuts, prefer the ratio closest to 1; break ties toward the
// free-side cut position, then toward the smaller index. The free-side
// anchor is what makes identical inputs reproduce identical nests.
bool improves(const std::optional<CutChoice>& best, std::size_t cut, const Rat& ratio,
              std::size_t anchor) {
    if (!best) return true;
    const Rat d_new = rat_abs(ratio - 1);
    const Rat d_old = rat_abs(best->ratio - 1);
    if (d_new != d_old) return d_new < d_old;
    return index_distance(cut, anchor) < index_distance(best->cut, anchor);
}

}  // namespace

MatchedNestPair build_matched_nests(const LengthModel& lx, const LengthModel& ly, int N) {
    if (!(lx.cantor() == ly.cantor()))
        throw ContractError("models must share the same CantorApprox");
    if (N < 0) throw ContractError("level count must be >= 0");
    const std::size_t nleaf = lx.leaf_count();
    if (nleaf == 0) throw ContractError("empty model");
    if (lx.interval_max_at(0, 0) <= 0 || ly.interval_max_at(0, 0) <= 0)
        throw ContractError("level-0 Max values must be positive");

    const auto& leaves = lx.cantor().leaves();
    std::vector<std::vector<NestBlock>> levels;
    {
        NestBlock root;
        root.x_first = root.y_first = 0;
        root.x_last = root.y_last = nleaf - 1;
        root.max_x = lx.range_max(0, nleaf - 1);
        root.max_y = ly.range_max(0, nleaf - 1);
        root.ratio = Rat(1);
        levels.push_back({root});
    }
    // |C| = 1 for both schemes (hull of C is [0,1])
    const Rat c_diam(1);

    for (int n = 0; n < N; ++n) {
        const bool free_is_y = (n % 2 == 0);
        const LengthModel& fm = free_is_y ? ly : lx;  // free side
        const LengthModel& gm = free_is_y ? lx : ly;  // fitted side
        const Rat bound = pow2_inv(static_cast<unsigned>(n) + 2) * c_diam;
        const Rat eps = pow2_inv(static_cast<unsigned>(n) + 2);

        std::vector<NestBlock> next;
        for (std::size_t pj = 0; pj < levels[n].size(); ++pj) {
            const NestBlock& par = levels[n][pj];
            const LeafRange fpar = free_is_y ? LeafRange{par.y_first, par.y_last}
                                             : LeafRange{par.x_first, par.x_last};
            const LeafRange gpar = free_is_y ? LeafRange{par.x_first, par.x_last}
                                             : LeafRange{par.y_first, par.y_last};

            const auto cuts = free_split(leaves, fpar, bound, n + 1);
            const Rat max_f = fm.range_max(fpar.first, fpar.last);
            const std::size_t arg_f = fm.range_argmax(fpar.first, fpar.last);
            const Rat max_g = gm.range_max(gpar.first, gpar.last);
            const std::size_t arg_g = gm.range_argmax(gpar.first, gpar.last);

            std::vector<Rat> fr(cuts.size());
            std::size_t lidx = 0;
            for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
                fr[ci] = fm.range_max(cuts[ci].first, cuts[ci].last) / max_f;
                if (cuts[ci].first <= arg_f && arg_f <= cuts[ci].last) lidx = ci;
            }

            // recorded ratio is always Y over X
            auto ratio_of = [&](const Rat& fitted_ratio, std::size_t ci) {
                return free_is_y ? fr[ci] / fitted_ratio : fitted_ratio / fr[ci];
            };
            auto in_window = [&](const Rat& r) { return 1 - eps < r && r < 1 + eps; };
            // type invariant: level-(n+1) intervals have diameter < 2^-(n+1)|C|
            const Rat level_bound = pow2_inv(static_cast<unsigned>(n) + 1) * c_diam;

            std::vector<LeafRange> fit(cuts.size());

            if (arg_g - gpar.first < lidx || gpar.last - arg_g < cuts.size() - 1 - lidx)
                throw MatchingError(n + 1, Rat(0),
                                    "fitted maximizer leaves no room for " +
                                        std::to_string(cuts.size()) + " children at level " +
                                        std::to_string(n + 1));

            // left scan: children before the maximizer child
            std::size_t cur = gpar.first;
            for (std::size_t i = 0; i < lidx; ++i) {
                // reserve one leaf per remaining left child plus the maximizer
                const std::size_t cmax = arg_g - 1 - (lidx - 1 - i);
                std::optional<CutChoice> best;
                Rat prefix_max;
                for (std::size_t c = cur; c <= cmax; ++c) {
                    prefix_max = (c == cur) ? gm.value(c) : std::max(prefix_max, gm.value(c));
                    if (leaves[c].hi - leaves[cur].lo >= level_bound) break;
                    Rat r = ratio_of(prefix_max / max_g, i);
                    if (in_window(r) && improves(best, c, r, cuts[i].last))
                        best = CutChoice{c, r};
                }
                if (!best)
                    throw MatchingError(
                        n + 1, fr[i],
                        "no cut lands the ratio window at level " + std::to_string(n + 1) +
                            ", parent " + std::to_string(pj) + ", left child " +
                            std::to_string(i) + ", target " + rat_to_string(fr[i]));
                fit[i] = {cur, best->cut};
                cur = best->cut + 1;
            }

            // right scan: children after the maximizer child
            std::size_t cur_hi = gpar.last;
            for (std::size_t i = cuts.size(); i-- > lidx + 1;) {
                const std::size_t cmin = arg_g + 1 + (i - lidx - 1);
                std::optional<CutChoice> best;
                Rat suffix_max;
                for (std::size_t c = cur_hi; c >= cmin; --c) {
                    suffix_max =
                        (c == cur_hi) ? gm.value(c) : std::max(suffix_max, gm.value(c));
                    if (leaves[cur_hi].hi - leaves[c].lo >= level_bound) break;
                    Rat r = ratio_of(suffix_max / max_g, i);
                    if (in_window(r) && improves(best, c, r, cuts[i].first))
                        best = CutChoice{c, r};
                    if (c == cmin) break;
                }
                if (!best)
                    throw MatchingError(
                        n + 1, fr[i],
                        "no cut lands the ratio window at level " + std::to_string(n + 1) +
                            ", parent " + std::to_string(pj) + ", right child " +
                            std::to_string(i) + ", target " + rat_to_string(fr[i]));
                fit[i] = {best->cut, cur_hi};
                cur_hi = best->cut - 1;
            }

            fit[lidx] = {cur, cur_hi};
            if (leaves[cur_hi].hi - leaves[cur].lo >= level_bound)
                throw MatchingError(n + 1, fr[lidx],
                                    "maximizer child exceeds the diameter bound at level " +
                                        std::to_string(n + 1));

            for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
                NestBlock blk;
                blk.parent = pj;
                if (free_is_y) {
                    blk.y_first = cuts[ci].first;
                    blk.y_last = cuts[ci].last;
                    blk.x_first = fit[ci].first;
                    blk.x_last = fit[ci].last;
                } else {
                    blk.x_first = cuts[ci].first;
                    blk.x_last = cuts[ci].last;
                    blk.y_first = fit[ci].first;
                    blk.y_last = fit[ci].last;
                }
                blk.max_x = lx.range_max(blk.x_first, blk.x_last);
                blk.max_y = ly.range_max(blk.y_first, blk.y_last);
                blk.ratio = (blk.max_y / par.max_y) / (blk.max_x / par.max_x);
                if (!in_window(blk.ratio))
                    throw MatchingError(n + 1, blk.ratio,
                                        "constructed ratio escaped the window");
                next.push_back(std::move(blk));
            }
        }
        levels.push_back(std::move(next));
    }
    return MatchedNestPair(lx, ly, std::move(levels));
}

std::size_t MatchedNestPair::verify(bool check_windows) const {
    std::size_t checked = 0;
    const auto& leaves = lx_.cantor().leaves();
    for (int n = 0; n < level_count(); ++n) {
        const auto& lvl = levels_[n];
        const Rat diam_bound = pow2_inv(static_cast<unsigned>(n));
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            const NestBlock& b = lvl[i];
            if (lx_.range_max(b.x_first, b.x_last) != b.max_x ||
                ly_.range_max(b.y_first, b.y_last) != b.max_y)
                throw ContractError("stored Max disagrees with raw recomputation");
            if (n > 0) {
                const NestBlock& par = levels_[n - 1][b.parent];
                if (b.x_first < par.x_first || b.x_last > par.x_last ||
                    b.y_first < par.y_first || b.y_last > par.y_last)
                    throw ContractError("containment pattern broken");
                Rat r = (b.max_y / par.max_y) / (b.max_x / par.max_x);
                if (r != b.ratio) throw ContractError("stored ratio disagrees");
                const Rat eps = pow2_inv(static_cast<unsigned>(n) + 1);
                if (check_windows && !(1 - eps < r && r < 1 + eps))
                    throw ContractError("ratio outside the window at level " +
                                        std::to_string(n));
                if (check_windows &&
                    (leaves[b.x_last].hi - leaves[b.x_first].lo >= diam_bound ||
                     leaves[b.y_last].hi - leaves[b.y_first].lo >= diam_bound))
                    throw ContractError("diameter bound violated at level " +
                                        std::to_string(n));
            }
            // ordering within the level
            if (i > 0 && (lvl[i - 1].x_last >= b.x_first || lvl[i - 1].y_last >= b.y_first))
                throw ContractError("blocks out of order");
            ++checked;
        }
    }
    return checked;
}

Rat EndpointMap::eval(const Rat& x) const {
    if (pairs.empty()) return x;
    if (x <= pairs.front().first) return x - pairs.front().first + pairs.front().second;
    if (x >= pairs.back().first) return x - pairs.back().first + pairs.back().second;
    std::size_t lo = 0, hi = pairs.size() - 1;
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (pairs[mid].first <= x)
            lo = mid;
        else
            hi = mid;
    }
    const auto& [x0, y0] = pairs[lo];
    const auto& [x1, y1] = pairs[hi];
    if (x == x0) return y0;
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

EndpointMap base_psi(const MatchedNestPair& pair) {
    std::map<Rat, Rat> corr;
    auto add = [&](const Rat& x, const Rat& y) {
        auto [it, inserted] = corr.emplace(x, y);
        if (!inserted && it->second != y)
            throw ContractError("endpoint correspondence inconsistent across levels");
    };
    for (int n = 0; n < pair.level_count(); ++n) {
        for (const auto& b : pair.level(n)) {
            Interval jx = pair.x_interval(b);
            Interval jy = pair.y_interval(b);
            add(jx.lo, jy.lo);
            add(jx.hi, jy.hi);
        }
    }
    EndpointMap psi;
    psi.pairs.assign(corr.begin(), corr.end());
    for (std::size_t i = 1; i < psi.pairs.size(); ++i)
        if (psi.pairs[i - 1].second >= psi.pairs[i].second)
            throw ContractError("endpoint correspondence is not order-preserving");
    return psi;
}

}  // namespace hcs
