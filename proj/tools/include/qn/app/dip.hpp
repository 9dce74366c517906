#pragma once

#include "qn/plant.hpp"

namespace qn::app {

/// Frequency (Hz) in [f_min_hz, f_max_hz] where K_sym = 2 cot(phi), i.e.
/// the back-action coupling of laser amplitude noise cancels for the
/// co-moving and BSAR LOs.
/// Throws DomainError for the direct LO or when cot(phi) = 0, and
/// NoRootError ("no dip in band") without a sign change on the band.
Real find_dip(LoOption option, const PlantParams& params, Real phi, Real f_min_hz, Real f_max_hz);

}  // namespace qn::app
