#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hcs/errors.hpp"
#include "hcs/interval.hpp"

namespace hcs {

enum class Scheme { Canonical, MiddleThird };

/// Multi-index (i_1, ..., i_n), 1-based entries.
/// Canonical scheme: 1 <= i_j <= 2j-1. MiddleThird: i_j in {1, 2}.
using Address = std::vector<int>;

enum class XLayout { TrueCantor, AddressUniform };

/// Selects the descendants of parent j (1-based) at level q, viewed at the
/// finer level p > q.
struct ChildSelector {
    int p;
    int q;
    int j;
};

/// Depth-indexed nest of closed rational intervals approximating a Cantor
/// set. Level 0 is the single interval [0,1]; level k+1 refines level k.
/// Immutable after construction; safe to share across threads.
class CantorApprox {
  public:
    static constexpr std::size_t kDefaultIntervalCap = 1000000;

    /// Builds the nest down to `depth`. Throws ResourceError when the total
    /// interval count would exceed `cap`.
    static CantorApprox build(Scheme scheme, int depth,
                              std::size_t cap = kDefaultIntervalCap);

    Scheme scheme() const { return scheme_; }
    int depth() const { return depth_; }

    const std::vector<std::vector<Interval>>& levels() const { return levels_; }
    const std::vector<Interval>& level(int k) const { return levels_.at(k); }
    const std::vector<Interval>& leaves() const { return levels_.back(); }
    std::size_t leaf_count() const { return levels_.back().size(); }

    /// Number of children each level-k interval has at level k+1.
    int branching(int k) const;

    /// Parent index (0-based) at level k-1 of interval i (0-based) at level k.
    int parent_index(int k, int i) const;

    /// Flat 0-based index of the level-|a| interval addressed by `a`.
    std::size_t address_to_index(const Address& a) const;

    /// The unique level-|a| interval reached by following `a`.
    /// Throws AddressError for invalid entries or |a| > depth.
    const Interval& address_to_interval(const Address& a) const;

    /// Inverse of address_to_index at level k.
    Address index_to_address(int k, std::size_t index) const;

    /// Finite-depth witness that x is an end point of C: x must be the lo or
    /// hi of some deepest-level interval (every such endpoint is adjacent to
    /// a discarded gap or to the exterior of [0,1]). Throws DomainError when
    /// x is not a deepest-level interval endpoint.
    bool is_endpoint(const Rat& x) const;

    /// Index set K(p; q, j) (1-based, per-level indices) of the level-p
    /// intervals contained in the level-q interval of 1-based index j.
    /// Computed by exact containment; requires p > q.
    std::vector<int> children(const ChildSelector& sel) const;

    /// Cells of the AddressUniform plotting layout at level k (Canonical
    /// scheme): each parent cell of width W splits into 2k-1 kept cells of
    /// width W/(3k-2) separated by gaps of width W/(6k-4). For MiddleThird
    /// the true intervals already are the layout. Both layouts agree on cell
    /// count and ordering with the true construction.
    std::vector<Interval> layout_cells(int k, XLayout layout) const;

    void validate() const;

    friend bool operator==(const CantorApprox& a, const CantorApprox& b) {
        return a.scheme_ == b.scheme_ && a.depth_ == b.depth_ && a.levels_ == b.levels_;
    }

  private:
    CantorApprox() = default;

    Scheme scheme_ = Scheme::Canonical;
    int depth_ = 0;
    std::vector<std::vector<Interval>> levels_;
};

using CantorPtr = std::shared_ptr<const CantorApprox>;

inline CantorPtr make_cantor(Scheme scheme, int depth,
                             std::size_t cap = CantorApprox::kDefaultIntervalCap) {
    return std::make_shared<const CantorApprox>(CantorApprox::build(scheme, depth, cap));
}

/// Validates address entries against the scheme without needing a built nest.
void validate_address(Scheme scheme, const Address& a);

}  // namespace hcs
