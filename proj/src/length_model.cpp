#include "hcs/length_model.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hcs {

Rat PiecewiseLinear::eval(const Rat& x) const {
    if (points.empty()) throw ContractError("empty piecewise-linear function");
    if (x <= points.front().first) return points.front().second;
    if (x >= points.back().first) return points.back().second;
    // binary search: last point with px <= x
    std::size_t lo = 0, hi = points.size() - 1;
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (points[mid].first <= x)
            lo = mid;
        else
            hi = mid;
    }
    const auto& [x0, y0] = points[lo];
    const auto& [x1, y1] = points[hi];
    if (x == x0) return y0;
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

Rat canonical_length(const Address& a) {
    validate_address(Scheme::Canonical, a);
    Rat v(1);
    for (std::size_t j = 0; j < a.size(); ++j) {
        int n = static_cast<int>(j) + 1;
        v *= 1 - rat_abs(rat(a[j], n) - 1);
    }
    return v;
}

PiecewiseLinear canonical_graph(int n, XLayout layout) {
    if (n < 1) throw ContractError("graph depth must be >= 1");
    CantorApprox c = CantorApprox::build(Scheme::Canonical, n);
    auto cells = c.layout_cells(n, layout);
    PiecewiseLinear pl;
    pl.points.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Rat v = canonical_length(c.index_to_address(n, i));
        pl.points.emplace_back(cells[i].lo, v);
        pl.points.emplace_back(cells[i].hi, v);
    }
    return pl;
}

LengthModel LengthModel::canonical(int depth) {
    CantorPtr c = make_cantor(Scheme::Canonical, depth);
    std::vector<Rat> vals;
    vals.reserve(c->leaf_count());
    for (std::size_t i = 0; i < c->leaf_count(); ++i)
        vals.push_back(canonical_length(c->index_to_address(depth, i)));
    return from_values(std::move(c), std::move(vals));
}

LengthModel LengthModel::from_values(CantorPtr cantor, std::vector<Rat> values) {
    if (values.size() != cantor->leaf_count())
        throw ContractError("value count does not match leaf count");
    for (auto& v : values) {
        v.canonicalize();  // exact comparisons assume reduced form
        if (v < 0) throw ContractError("length values must be >= 0");
    }
    LengthModel m;
    m.cantor_ = std::move(cantor);
    m.values_ = std::move(values);
    m.interval_max_ = m.recompute_interval_max();
    return m;
}

LengthModel LengthModel::from_raw(CantorPtr cantor, std::vector<Rat> values,
                                  std::vector<std::vector<Rat>> interval_max) {
    LengthModel m;
    m.cantor_ = std::move(cantor);
    m.values_ = std::move(values);
    m.interval_max_ = std::move(interval_max);
    return m;
}

std::vector<std::vector<Rat>> LengthModel::recompute_interval_max() const {
    const int depth = cantor_->depth();
    std::vector<std::vector<Rat>> maxima(depth + 1);
    maxima[depth] = values_;
    for (int k = depth - 1; k >= 0; --k) {
        const int b = cantor_->branching(k);
        const std::size_t count = cantor_->level(k).size();
        maxima[k].resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            Rat mx = maxima[k + 1][i * b];
            for (int c = 1; c < b; ++c) mx = std::max(mx, maxima[k + 1][i * b + c]);
            maxima[k][i] = mx;
        }
    }
    return maxima;
}

const Rat& LengthModel::value_at(const Address& a) const {
    if (static_cast<int>(a.size()) != depth())
        throw AddressError("point values live at address length = depth");
    return values_[cantor_->address_to_index(a)];
}

Rat LengthModel::range_max(std::size_t first, std::size_t last) const {
    Rat mx = values_[first];
    for (std::size_t i = first + 1; i <= last; ++i) mx = std::max(mx, values_[i]);
    return mx;
}

std::size_t LengthModel::range_argmax(std::size_t first, std::size_t last) const {
    std::size_t best = first;
    for (std::size_t i = first + 1; i <= last; ++i)
        if (values_[i] > values_[best]) best = i;
    return best;
}

std::optional<std::pair<std::size_t, std::size_t>> LengthModel::leaves_in(
    const Interval& I) const {
    const auto& leaves = cantor_->leaves();
    // first leaf with lo >= I.lo
    auto it = std::lower_bound(leaves.begin(), leaves.end(), I.lo,
                               [](const Interval& iv, const Rat& x) { return iv.lo < x; });
    std::size_t first = static_cast<std::size_t>(it - leaves.begin());
    std::size_t last = first;
    bool any = false;
    for (std::size_t i = first; i < leaves.size() && leaves[i].hi <= I.hi; ++i) {
        if (I.contains(leaves[i])) {
            last = i;
            any = true;
        }
    }
    if (!any) return std::nullopt;
    return std::make_pair(first, last);
}

bool LengthModel::contains_point(const Rat& x, const Rat& y) const {
    if (y < 0) return false;
    const auto& leaves = cantor_->leaves();
    // last leaf with lo <= x
    auto it = std::upper_bound(leaves.begin(), leaves.end(), x,
                               [](const Rat& v, const Interval& iv) { return v < iv.lo; });
    if (it == leaves.begin()) return false;
    const std::size_t i = static_cast<std::size_t>(it - leaves.begin()) - 1;
    return leaves[i].contains(x) && y <= values_[i];
}

std::pair<Rat, std::size_t> LengthModel::max_over_leaf(const Interval& I) const {
    auto range = leaves_in(I);
    if (!range)
        throw DomainError("interval [" + rat_to_string(I.lo) + "," + rat_to_string(I.hi) +
                          "] contains no deepest-level interval");
    std::size_t arg = range_argmax(range->first, range->second);
    return {values_[arg], arg};
}

std::pair<Rat, Interval> LengthModel::max_over(const Interval& I) const {
    auto [v, leaf] = max_over_leaf(I);
    return {v, cantor_->leaves()[leaf]};
}

UscLimitReport LengthModel::check_usc_limit(const Address& a) const {
    if (static_cast<int>(a.size()) != depth())
        throw ContractError("address length must equal model depth");
    UscLimitReport rep;
    rep.address = a;
    std::size_t idx = 0;
    for (int k = 1; k <= depth(); ++k) {
        idx = idx * static_cast<std::size_t>(
                        cantor_->scheme() == Scheme::Canonical ? 2 * k - 1 : 2) +
              static_cast<std::size_t>(a[k - 1] - 1);
        rep.sequence.push_back(interval_max_[k][idx]);
    }
    rep.nonincreasing = true;
    for (std::size_t k = 1; k < rep.sequence.size(); ++k) {
        if (rep.sequence[k] > rep.sequence[k - 1]) {
            rep.nonincreasing = false;
            rep.first_violation_level = static_cast<int>(k) + 1;
            break;
        }
    }
    rep.final_matches_value = !rep.sequence.empty() && rep.sequence.back() == value_at(a);
    return rep;
}

PeakDensityStats LengthModel::peak_density_stats() const {
    std::set<Rat> distinct(values_.begin(), values_.end());
    distinct.insert(Rat(0));
    PeakDensityStats st{*distinct.rbegin(), Rat(0)};
    Rat prev;
    bool first = true;
    for (const auto& v : distinct) {
        if (!first) st.max_gap = std::max(st.max_gap, Rat(v - prev));
        prev = v;
        first = false;
    }
    return st;
}

ShcsReport LengthModel::check_shcs_definition(const ShcsSchedule& schedule) const {
    const int depth = this->depth();
    const int start = schedule.start_level;
    if (depth < start) throw ContractError("model depth must be >= schedule start level");
    ShcsReport rep;

    // (i) density of positive lengths: every deepest interval carries one
    rep.positivity_ok = true;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] <= 0) {
            rep.positivity_ok = false;
            rep.zero_leaf = i;
            break;
        }
    }

    // worst boundary-child max per level (first/last child inside each parent)
    auto boundary_witness = [&](int level) {
        const int b = cantor_->branching(level - 1);
        const auto& mx = interval_max_[level];
        ShcsWitness w;
        w.level = level;
        w.value = Rat(-1);
        for (std::size_t p = 0; p < interval_max_[level - 1].size(); ++p) {
            for (std::size_t i : {p * b, p * b + b - 1}) {
                if (mx[i] > w.value) {
                    w.value = mx[i];
                    w.index = i;
                }
            }
        }
        return w;
    };
    // neighbor-gap witness at the level's leftmost global maximizer
    auto interior_witness = [&](int level) -> std::optional<ShcsWitness> {
        const auto& mx = interval_max_[level];
        std::size_t best = 0;
        for (std::size_t i = 1; i < mx.size(); ++i)
            if (mx[i] > mx[best]) best = i;
        if (best == 0 || best + 1 == mx.size()) return std::nullopt;  // not interior
        ShcsWitness w;
        w.level = level;
        w.index = best;
        w.value = std::max(mx[best] - mx[best - 1], mx[best] - mx[best + 1]);
        return w;
    };

    ShcsWitness c2 = boundary_witness(start);
    rep.boundary_constant =
        schedule.boundary_constant.value_or(Rat(start) * c2.value);
    rep.boundary_decay_ok = true;
    for (int n = start; n <= depth; ++n) {
        ShcsWitness w = boundary_witness(n);
        w.bound = rep.boundary_constant / n;
        rep.boundary_witnesses.push_back(w);
        if (w.value > w.bound && rep.boundary_decay_ok) {
            rep.boundary_decay_ok = false;
            rep.boundary_failure = w;
        }
    }

    std::optional<ShcsWitness> c3 = interior_witness(start);
    rep.interior_constant = schedule.interior_constant.value_or(
        c3 ? Rat(start) * c3->value : Rat(1));
    rep.interior_limsup_ok = true;
    for (int n = start; n <= depth; ++n) {
        auto w = interior_witness(n);
        if (!w) continue;
        w->bound = rep.interior_constant / n;
        rep.interior_witnesses.push_back(*w);
        if (w->value > w->bound && rep.interior_limsup_ok) {
            rep.interior_limsup_ok = false;
            rep.interior_failure = *w;
        }
    }
    return rep;
}

}  // namespace hcs
