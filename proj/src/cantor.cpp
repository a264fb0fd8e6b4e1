#include "hcs/cantor.hpp"

#include <algorithm>
#include <string>

namespace hcs {

namespace {

int max_entry(Scheme scheme, int level) {
    return scheme == Scheme::Canonical ? 2 * level - 1 : 2;
}

}  // namespace

void validate_address(Scheme scheme, const Address& a) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        int hi = max_entry(scheme, static_cast<int>(j) + 1);
        if (a[j] < 1 || a[j] > hi)
            throw AddressError("address entry " + std::to_string(a[j]) + " at position " +
                               std::to_string(j + 1) + " outside [1," + std::to_string(hi) + "]");
    }
}

CantorApprox CantorApprox::build(Scheme scheme, int depth, std::size_t cap) {
    if (depth < 0) throw ContractError("depth must be >= 0");
    CantorApprox c;
    c.scheme_ = scheme;
    c.depth_ = depth;
    c.levels_.push_back({Interval{Rat(0), Rat(1)}});
    std::size_t total = 1;
    for (int k = 1; k <= depth; ++k) {
        const auto& prev = c.levels_.back();
        const int kept = c.branching(k - 1);
        total += prev.size() * static_cast<std::size_t>(kept);
        if (total > cap)
            throw ResourceError("interval count " + std::to_string(total) +
                                " exceeds cap " + std::to_string(cap) +
                                " at level " + std::to_string(k));
        std::vector<Interval> next;
        next.reserve(prev.size() * kept);
        if (scheme == Scheme::Canonical) {
            // split into 4k-3 equal parts, keep the odd-numbered ones
            const int parts = 4 * k - 3;
            for (const auto& iv : prev) {
                Rat w = iv.length() / parts;
                for (int p = 0; p < parts; p += 2)
                    next.push_back(Interval{iv.lo + p * w, iv.lo + (p + 1) * w});
            }
        } else {
            for (const auto& iv : prev) {
                Rat w = iv.length() / 3;
                next.push_back(Interval{iv.lo, iv.lo + w});
                next.push_back(Interval{iv.hi - w, iv.hi});
            }
        }
        c.levels_.push_back(std::move(next));
    }
    return c;
}

int CantorApprox::branching(int k) const {
    // children count of a level-k interval (at level k+1)
    return scheme_ == Scheme::Canonical ? 2 * (k + 1) - 1 : 2;
}

int CantorApprox::parent_index(int k, int i) const {
    if (k <= 0) throw ContractError("level 0 has no parent");
    return i / branching(k - 1);
}

std::size_t CantorApprox::address_to_index(const Address& a) const {
    validate_address(scheme_, a);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        idx = idx * static_cast<std::size_t>(max_entry(scheme_, static_cast<int>(j) + 1)) +
              static_cast<std::size_t>(a[j] - 1);
    return idx;
}

const Interval& CantorApprox::address_to_interval(const Address& a) const {
    if (static_cast<int>(a.size()) > depth_)
        throw AddressError("address length " + std::to_string(a.size()) +
                           " exceeds depth " + std::to_string(depth_));
    return levels_[a.size()][address_to_index(a)];
}

Address CantorApprox::index_to_address(int k, std::size_t index) const {
    Address a(static_cast<std::size_t>(k));
    for (int j = k; j >= 1; --j) {
        std::size_t base = static_cast<std::size_t>(max_entry(scheme_, j));
        a[j - 1] = static_cast<int>(index % base) + 1;
        index /= base;
    }
    return a;
}

bool CantorApprox::is_endpoint(const Rat& x) const {
    for (const auto& iv : leaves())
        if (x == iv.lo || x == iv.hi) return true;
    throw DomainError("x is not an endpoint of any level-" + std::to_string(depth_) +
                      " interval");
}

std::vector<int> CantorApprox::children(const ChildSelector& sel) const {
    if (sel.p <= sel.q) throw ContractError("child selector requires p > q");
    if (sel.p > depth_ || sel.q < 0) throw ContractError("levels out of range");
    const auto& parents = levels_[sel.q];
    if (sel.j < 1 || sel.j > static_cast<int>(parents.size()))
        throw ContractError("parent index out of range");
    const Interval& parent = parents[sel.j - 1];
    std::vector<int> out;
    const auto& fine = levels_[sel.p];
    for (std::size_t i = 0; i < fine.size(); ++i)
        if (parent.contains(fine[i])) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<Interval> CantorApprox::layout_cells(int k, XLayout layout) const {
    if (k < 0 || k > depth_) throw ContractError("level out of range");
    if (layout == XLayout::TrueCantor || scheme_ == Scheme::MiddleThird)
        return levels_[k];
    std::vector<Interval> cells = {Interval{Rat(0), Rat(1)}};
    for (int lvl = 1; lvl <= k; ++lvl) {
        std::vector<Interval> next;
        next.reserve(cells.size() * static_cast<std::size_t>(2 * lvl - 1));
        for (const auto& cell : cells) {
            Rat u = cell.length() / (6 * lvl - 4);
            for (int c = 0; c < 2 * lvl - 1; ++c) {
                Rat lo = cell.lo + 3 * c * u;
                next.push_back(Interval{lo, lo + 2 * u});
            }
        }
        cells = std::move(next);
    }
    return cells;
}

void CantorApprox::validate() const {
    for (int k = 0; k <= depth_; ++k) {
        const auto& lvl = levels_[k];
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            if (lvl[i].lo > lvl[i].hi) throw ContractError("inverted interval");
            if (i + 1 < lvl.size() && lvl[i].hi >= lvl[i + 1].lo)
                throw ContractError("level " + std::to_string(k) +
                                    " intervals overlap or are unsorted");
        }
        if (k > 0) {
            for (std::size_t i = 0; i < lvl.size(); ++i) {
                const Interval& par = levels_[k - 1][parent_index(k, static_cast<int>(i))];
                if (!par.contains(lvl[i]))
                    throw ContractError("child escapes its parent at level " +
                                        std::to_string(k));
            }
        }
    }
}

}  // namespace hcs
