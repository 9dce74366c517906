#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include <boost/math/tools/roots.hpp>

#include "qn/errors.hpp"
#include "qn/types.hpp"

namespace qn {

/// Bisection for a sign change of `fn` on [lo, hi], stopping once the
/// bracket is narrower than rel_tol times its lower end.
/// Throws NoRootError if fn(lo) and fn(hi) have the same sign.
inline Real bisect_root(const std::function<Real(Real)>& fn, Real lo, Real hi,
                        Real rel_tol = 1e-9L) {
    const Real f_lo = fn(lo);
    const Real f_hi = fn(hi);
    if (f_lo == 0) return lo;
    if (f_hi == 0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw NoRootError("no sign change in bracket");
    }
    auto done = [rel_tol](Real a, Real b) { return std::abs(b - a) <= rel_tol * std::min(std::abs(a), std::abs(b)); };
    std::uintmax_t max_iter = 400;
    const auto [a, b] = boost::math::tools::bisect(fn, lo, hi, done, max_iter);
    return (a + b) / 2;
}

}  // namespace qn
