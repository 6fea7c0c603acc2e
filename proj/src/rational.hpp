#pragma once

#include <gmpxx.h>
#include <string>

namespace macvv {

// Arbitrary-precision rationals, always canonical (gcd 1, positive denominator).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace macvv
