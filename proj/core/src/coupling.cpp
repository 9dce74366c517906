#include "qn/coupling.hpp"

#include <cmath>

#include "qn/errors.hpp"

namespace qn {

using constants::hbar;
using constants::speed_of_light;

Real arm_half_bandwidth(Real arm_length, Real itm_transmission) {
    if (!(arm_length > 0) || !std::isfinite(arm_length)) {
        throw DomainError("arm_length must be > 0");
    }
    if (!(itm_transmission > 0 && itm_transmission < 1)) {
        throw DomainError("itm_transmission must be in (0, 1)");
    }
    return speed_of_light * itm_transmission / (4 * arm_length);
}

Real normalized_power_theta(const PlantParams& params) {
    if (!(params.arm_power > 0)) throw DomainError("arm_power must be > 0");
    if (!(params.reduced_mass > 0)) throw DomainError("reduced_mass must be > 0");
    if (!(params.arm_length > 0)) throw DomainError("arm_length must be > 0");
    if (!(params.wavelength > 0)) throw DomainError("wavelength must be > 0");
    const Real omega_p = params.carrier_angular_frequency();
    return 4 * omega_p * params.arm_power /
           (params.reduced_mass * speed_of_light * params.arm_length);
}

Real sql_displacement(Real mass, Real omega) {
    if (!(mass > 0)) throw DomainError("mass must be > 0");
    if (!(omega > 0)) throw DomainError("omega must be > 0");
    return std::sqrt(2 * hbar / (mass * omega * omega));
}

CouplingFactors coupling_factors(const PlantParams& params, Real omega) {
    if (!(omega > 0) || !std::isfinite(omega)) throw DomainError("omega must be > 0");
    params.validate();

    CouplingFactors cf;
    cf.omega = omega;
    cf.gamma_arm = arm_half_bandwidth(params.arm_length, params.itm_transmission);
    cf.theta = normalized_power_theta(params);

    const Real g = cf.gamma_arm;
    cf.beta_arm = std::atan(omega / g);
    cf.beta_sag = 2 * cf.beta_arm + constants::pi / 2;
    cf.k_arm = 2 * cf.theta * g / (omega * omega * (g * g + omega * omega));

    const Real sin_b = std::sin(cf.beta_arm);
    const Real cos_b = std::cos(cf.beta_arm);
    cf.k_sym = 4 * cf.k_arm * sin_b * sin_b;
    cf.k_asym = 4 * cf.k_arm * cos_b * cos_b;
    cf.k_star_sym = 4 * params.r_bs * params.t_bs() * cf.k_sym;
    cf.x_sql = sql_displacement(params.reduced_mass, omega);
    return cf;
}

}  // namespace qn
