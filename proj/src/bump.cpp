#include "hcs/bump.hpp"

#include <algorithm>
#include <string>

namespace hcs {

Rat BumpFunction::eval(const Rat& x) const {
    if (!interval.contains(x))
        throw DomainError("bump evaluated outside its interval");
    const auto& leaves = cantor->leaves();
    if (x >= maximizer.lo && x <= maximizer.hi) return max_value();
    if (x < maximizer.lo) {
        // Max(l, [u, x]): last leaf with lo <= x
        std::size_t lo = first_leaf, hi = maximizer_leaf;
        while (lo < hi) {
            std::size_t mid = (lo + hi + 1) / 2;
            if (leaves[mid].lo <= x)
                lo = mid;
            else
                hi = mid - 1;
        }
        return envelope[lo - first_leaf];
    }
    // Max(l, [x, v]): first leaf with hi >= x
    std::size_t lo = maximizer_leaf, hi = last_leaf;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (leaves[mid].hi >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return envelope[lo - first_leaf];
}

std::vector<std::pair<Rat, Rat>> BumpFunction::breakpoints() const {
    std::vector<std::pair<Rat, Rat>> out;
    const auto& leaves = cantor->leaves();
    out.reserve(2 * (last_leaf - first_leaf + 1));
    for (std::size_t i = first_leaf; i <= last_leaf; ++i) {
        out.emplace_back(leaves[i].lo, envelope[i - first_leaf]);
        out.emplace_back(leaves[i].hi, envelope[i - first_leaf]);
    }
    return out;
}

BumpFunction make_bump(const LengthModel& l, const Interval& I, std::size_t m) {
    auto range = l.leaves_in(I);
    if (!range) throw DomainError("bump interval contains no deepest-level interval");
    auto [first, last] = *range;
    if (m < first || m > last)
        throw ContractError("maximizer leaf lies outside the interval");
    Rat mx = l.range_max(first, last);
    if (l.value(m) != mx)
        throw ContractError("maximizer does not attain Max(l, I): " +
                            rat_to_string(l.value(m)) + " != " + rat_to_string(mx));
    BumpFunction b;
    b.interval = I;
    b.cantor = l.cantor_ptr();
    b.first_leaf = first;
    b.last_leaf = last;
    b.maximizer_leaf = m;
    b.maximizer = l.cantor().leaves()[m];
    b.envelope.resize(last - first + 1);
    b.raw.resize(last - first + 1);
    Rat run = l.value(first);
    for (std::size_t i = first; i <= m; ++i) {
        run = std::max(run, l.value(i));
        b.envelope[i - first] = run;
        b.raw[i - first] = l.value(i);
    }
    run = l.value(last);
    for (std::size_t i = last; i > m; --i) {
        run = std::max(run, l.value(i));
        b.envelope[i - first] = run;
        b.raw[i - first] = l.value(i);
    }
    return b;
}

BumpFunction make_bump(const LengthModel& l, const Interval& I) {
    return make_bump(l, I, l.max_over_leaf(I).second);
}

BumpReport verify_bump(const BumpFunction& b) {
    BumpReport rep;
    rep.monotone_ok = true;
    rep.max_jump = Rat(0);
    rep.underlying_max_jump = Rat(0);
    const std::size_t n = b.envelope.size();
    const std::size_t mpos = b.maximizer_leaf - b.first_leaf;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Rat step = b.envelope[i + 1] - b.envelope[i];
        const bool ascending = i + 1 <= mpos;
        if ((ascending && step < 0) || (!ascending && step > 0)) {
            if (rep.monotone_ok) {
                rep.monotone_ok = false;
                rep.inversion_leaf = b.first_leaf + i + 1;
            }
        }
        rep.max_jump = std::max(rep.max_jump, rat_abs(step));
        rep.underlying_max_jump =
            std::max(rep.underlying_max_jump, rat_abs(b.raw[i + 1] - b.raw[i]));
    }
    rep.jump_ok = rep.max_jump <= rep.underlying_max_jump || n <= 1;
    return rep;
}

Rat PartitionBump::eval(const Rat& x) const {
    // last bump with interval.lo <= x
    if (bumps.empty()) return Rat(0);
    std::size_t lo = 0, hi = bumps.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (bumps[mid].interval.lo <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return Rat(0);
    const BumpFunction& b = bumps[lo - 1];
    if (x > b.interval.hi) return Rat(0);
    return b.eval(x);
}

bool PartitionBump::boundary_below(const Rat& bound) const {
    for (const auto& b : bumps) {
        if (b.raw.front() > bound || b.raw.back() > bound) return false;
    }
    return true;
}

std::string bump_breakpoints_csv(const BumpFunction& b) {
    std::string out = "x,value\n";
    for (const auto& [x, v] : b.breakpoints())
        out += rat_to_string(x) + "," + rat_to_string(v) + "\n";
    return out;
}

PartitionBump make_partition_bump(const LengthModel& l,
                                  const std::vector<Interval>& partition) {
    PartitionBump pb;
    pb.bumps.reserve(partition.size());
    for (const auto& J : partition) pb.bumps.push_back(make_bump(l, J));
    std::sort(pb.bumps.begin(), pb.bumps.end(),
              [](const BumpFunction& a, const BumpFunction& b) {
                  return a.interval.lo < b.interval.lo;
              });
    return pb;
}

}  // namespace hcs
