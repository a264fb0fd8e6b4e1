#pragma once

#include "hcs/rational.hpp"

namespace hcs {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
struct Interval {
    Rat lo;
    Rat hi;

    Rat length() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool intersects(const Interval& other) const {
        return lo <= other.hi && other.lo <= hi;
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

}  // namespace hcs
