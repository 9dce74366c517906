#pragma once

#include <complex>
#include <numbers>

namespace qn {

// All model arithmetic runs in extended precision. At 1 Hz the homodyne
// cancellation of the common back-action term subtracts numbers ~1e8 times
// larger than their difference, which would eat half of a double mantissa.
using Real = long double;
using Complex = std::complex<Real>;

namespace constants {

inline constexpr Real speed_of_light = 299792458.0L;  // m/s, exact
inline constexpr Real hbar = 1.054571817e-34L;        // J s
inline constexpr Real pi = std::numbers::pi_v<Real>;
inline constexpr Real two_pi = 2 * pi;

}  // namespace constants

inline constexpr Real hz_to_angular(Real f_hz) { return constants::two_pi * f_hz; }
inline constexpr Real angular_to_hz(Real omega) { return omega / constants::two_pi; }

}  // namespace qn
