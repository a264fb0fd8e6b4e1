#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hcs {

// Exact rational scalar used everywhere except render/report boundaries.
using Rat = mpq_class;

/// Canonicalized construction; mpq_class(num, den) alone does not reduce,
/// and GMP equality assumes reduced form.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// 2^-n as an exact rational, n >= 0.
Rat pow2_inv(unsigned n);

/// 3^-n as an exact rational, n >= 0.
Rat pow3_inv(unsigned n);

/// Serialize as "p/q" (always with the slash, canonical form, e.g. "7/1").
std::string rat_to_string(const Rat& q);

/// Parse "p/q" or a plain integer "p". Throws ParseError on malformed input.
Rat rat_from_string(const std::string& s);

/// Decimal rendering with exactly 6 fractional digits, round half to even.
/// Computed exactly from the rational; no floating-point rounding involved.
std::string rat_to_fixed6(const Rat& q);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace hcs
