#pragma once

#include "qn/plant.hpp"
#include "qn/types.hpp"

namespace qn {

/// Frequency-dependent optomechanical quantities of the tuned Sagnac at one
/// sideband frequency. All angles in radians, frequencies angular.
struct CouplingFactors {
    Real omega = 0;       // sideband frequency, rad/s
    Real gamma_arm = 0;   // arm-cavity half-bandwidth, rad/s
    Real theta = 0;       // normalised power, rad^3/s^3
    Real beta_arm = 0;    // single-arm sideband phase, arctan(omega/gamma)
    Real beta_sag = 0;    // 2 beta_arm + pi/2
    Real k_arm = 0;
    Real k_sym = 0;       // 4 k_arm sin^2(beta_arm)
    Real k_asym = 0;      // 4 k_arm cos^2(beta_arm)
    Real k_star_sym = 0;  // 4 R T k_sym
    Real x_sql = 0;       // free-mass SQL displacement scale, m/sqrt(Hz)
};

/// c T_ITM / (4 L). Throws DomainError for L <= 0 or T_ITM outside (0, 1).
Real arm_half_bandwidth(Real arm_length, Real itm_transmission);

/// 4 omega_p P_arm / (M c L).
Real normalized_power_theta(const PlantParams& params);

/// sqrt(2 hbar / (M omega^2)).
Real sql_displacement(Real mass, Real omega);

/// Throws DomainError for omega <= 0 or an invalid plant.
CouplingFactors coupling_factors(const PlantParams& params, Real omega);

}  // namespace qn
