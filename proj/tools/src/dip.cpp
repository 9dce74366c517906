#include "qn/app/dip.hpp"

#include <cmath>

#include "qn/coupling.hpp"
#include "qn/errors.hpp"
#include "qn/roots.hpp"

namespace qn::app {

Real find_dip(LoOption option, const PlantParams& params, Real phi, Real f_min_hz, Real f_max_hz) {
    if (option == LoOption::Direct) {
        throw DomainError("the direct LO has no laser-noise cancellation frequency");
    }
    if (!(f_min_hz > 0) || !(f_max_hz > f_min_hz)) throw DomainError("dip band must satisfy 0 < f_min < f_max");
    const Real cot = std::cos(phi) / std::sin(phi);
    // cos(pi/2) rounds to ~1e-20 rather than zero.
    if (!(std::abs(cot) > 1e-12L)) throw DomainError("cot(phi) = 0: no cancellation frequency");
    params.validate();

    auto residual = [&](Real f_hz) {
        return coupling_factors(params, hz_to_angular(f_hz)).k_sym - 2 * cot;
    };
    try {
        return bisect_root(residual, f_min_hz, f_max_hz);
    } catch (const NoRootError&) {
        throw NoRootError("no dip in band");
    }
}

}  // namespace qn::app
