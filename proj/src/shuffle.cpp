#include "hcs/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hcs {

bool ShuffleStage::conditions_ok() const {
    for (const auto& c : boundary_checks)
        if (!c.ok) return false;
    for (const auto& c : adjacent_checks)
        if (!c.ok) return false;
    return sup_displacement <= displacement_bound;
}

namespace {

// interleave pattern (1,3,5,...,6,4,2), 0-based: position p -> sorted rank
std::vector<int> interleave_pattern(int k) {
    std::vector<int> rho;
    rho.reserve(k);
    for (int r = 0; r < k; r += 2) rho.push_back(r);
    int start = (k % 2 == 0) ? k - 1 : k - 2;
    for (int r = start; r >= 1; r -= 2) rho.push_back(r);
    return rho;
}

// net condition: the open balls D(v, radius) around the sorted values cover
// [0, max(v)] exactly when min(v) < radius and consecutive gaps < 2*radius
bool net_ok(std::vector<Rat> sorted_vals, const Rat& radius) {
    if (sorted_vals.front() >= radius) return false;
    for (std::size_t i = 1; i < sorted_vals.size(); ++i)
        if (sorted_vals[i] - sorted_vals[i - 1] >= 2 * radius) return false;
    return true;
}

}  // namespace

ShuffleStageResult shuffle_stage(const LengthModel& l, int n, int m_prev) {
    if (l.cantor().scheme() != Scheme::MiddleThird)
        throw ContractError("shuffle stages operate on MiddleThird models");
    if (n < 1) throw ContractError("stage index must be >= 1");
    const int depth = l.depth();
    if (m_prev < 0 || m_prev >= depth)
        throw ContractError("m_prev out of range");

    const Rat radius = Rat(1, 4 * n);

    // m_n: smallest level whose block maxima are a 1/(4n)-net per parent
    int m = -1;
    for (int cand = m_prev + 1; cand <= depth; ++cand) {
        const int per_parent = 1 << (cand - m_prev);
        bool ok = true;
        const auto& maxima = l.interval_max()[cand];
        for (std::size_t j = 0; ok && j < l.interval_max()[m_prev].size(); ++j) {
            std::vector<Rat> vals(maxima.begin() + j * per_parent,
                                  maxima.begin() + (j + 1) * per_parent);
            std::sort(vals.begin(), vals.end());
            ok = net_ok(std::move(vals), radius);
        }
        if (ok) {
            m = cand;
            break;
        }
    }
    if (m < 0)
        throw ResourceError("no level in (" + std::to_string(m_prev) + "," +
                            std::to_string(depth) + "] satisfies the 1/(4n)-net at stage " +
                            std::to_string(n) + "; the model needs refinement beyond depth " +
                            std::to_string(depth));

    const int per_parent = 1 << (m - m_prev);
    const std::size_t parents = l.interval_max()[m_prev].size();
    const std::size_t leaves_per_block = l.leaf_count() >> m;
    const auto& blocks_iv = l.cantor().level(m);
    const Rat cond_bound = Rat(1, n);

    ShuffleStage st;
    st.stage = n;
    st.m_prev = m_prev;
    st.m = m;
    st.displacement_bound = pow3_inv(static_cast<unsigned>(m_prev));
    st.sup_displacement = Rat(0);

    std::vector<Rat> new_values(l.leaf_count());
    const std::vector<int> rho = interleave_pattern(per_parent);

    for (std::size_t j = 0; j < parents; ++j) {
        const std::size_t base = j * static_cast<std::size_t>(per_parent);
        // stable ascending sort of the parent's block maxima
        std::vector<int> order(per_parent);
        std::iota(order.begin(), order.end(), 0);
        const auto& maxima = l.interval_max()[m];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return maxima[base + a] < maxima[base + b];
        });
        std::vector<int> sigma(per_parent);
        std::vector<Rat> offs(per_parent);
        for (int p = 0; p < per_parent; ++p) {
            const int src = order[rho[p]];
            sigma[p] = src;
            offs[p] = blocks_iv[base + p].lo - blocks_iv[base + src].lo;
            st.sup_displacement = std::max(st.sup_displacement, rat_abs(offs[p]));
            // translate the source block's leaf values to position p
            const std::size_t dst_leaf = (base + p) * leaves_per_block;
            const std::size_t src_leaf = (base + src) * leaves_per_block;
            for (std::size_t t = 0; t < leaves_per_block; ++t)
                new_values[dst_leaf + t] = l.value(src_leaf + t);
        }
        st.sigma.push_back(std::move(sigma));
        st.offsets.push_back(std::move(offs));
    }

    LengthModel shuffled = LengthModel::from_values(l.cantor_ptr(), std::move(new_values));

    // exact certificates on the new maxima
    const auto& new_max = shuffled.interval_max()[m];
    for (std::size_t j = 0; j < parents; ++j) {
        const std::size_t base = j * static_cast<std::size_t>(per_parent);
        for (std::size_t k : {base, base + per_parent - 1}) {
            ShuffleCheck c{k, new_max[k], cond_bound, new_max[k] < cond_bound};
            st.boundary_checks.push_back(std::move(c));
        }
        for (int i = 0; i + 1 < per_parent; ++i) {
            Rat gap = rat_abs(new_max[base + i] - new_max[base + i + 1]);
            ShuffleCheck c{base + static_cast<std::size_t>(i), gap, cond_bound,
                           gap < cond_bound};
            st.adjacent_checks.push_back(std::move(c));
        }
    }
    if (!st.conditions_ok())
        throw ContractError("stage conditions failed after the interleave at stage " +
                            std::to_string(n));
    return ShuffleStageResult{std::move(st), std::move(shuffled)};
}

ShuffleRunResult shuffle_run(const LengthModel& l, int stages) {
    if (stages < 1) throw ContractError("at least one stage required");
    ShuffleRunResult res{l, {}, {}};
    int m_prev = 0;
    for (int n = 1; n <= stages; ++n) {
        auto [st, model] = shuffle_stage(res.model, n, m_prev);
        m_prev = st.m;
        res.report.m_sequence.push_back(st.m);
        res.report.stage_displacements.push_back(st.sup_displacement);
        res.stages.push_back(std::move(st));
        res.model = std::move(model);
    }
    res.report.displacements_within_bounds = true;
    for (const auto& st : res.stages)
        if (st.sup_displacement > st.displacement_bound)
            res.report.displacements_within_bounds = false;

    const ShuffleStage& last = res.stages.back();
    res.report.final_boundary_max = Rat(0);
    for (const auto& c : last.boundary_checks)
        res.report.final_boundary_max = std::max(res.report.final_boundary_max, c.value);
    res.report.final_boundary_bound = Rat(1, stages);
    res.report.final_boundary_ok =
        res.report.final_boundary_max < res.report.final_boundary_bound;

    res.report.shcs_passed =
        res.model.depth() >= 3 && res.model.check_shcs_definition().passed();
    return res;
}

}  // namespace hcs
