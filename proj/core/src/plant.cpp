#include "qn/plant.hpp"

#include <cmath>
#include <string>

#include "qn/errors.hpp"

namespace qn {

std::string_view to_string(LoOption option) {
    switch (option) {
        case LoOption::Direct: return "direct";
        case LoOption::Bsar: return "bsar";
        case LoOption::CoMoving: return "comoving";
    }
    return "unknown";
}

std::optional<LoOption> parse_lo_option(std::string_view text) {
    if (text == "direct") return LoOption::Direct;
    if (text == "bsar") return LoOption::Bsar;
    if (text == "comoving" || text == "co-moving") return LoOption::CoMoving;
    return std::nullopt;
}

Real LoPowers::of(LoOption option) const {
    switch (option) {
        case LoOption::Direct: return direct;
        case LoOption::Bsar: return bsar;
        case LoOption::CoMoving: return comoving;
    }
    return 0;
}

Real PlantParams::carrier_angular_frequency() const {
    return constants::two_pi * constants::speed_of_light / wavelength;
}

namespace {

void require(bool ok, const char* field, const char* bound) {
    if (!ok) throw DomainError(std::string(field) + " must be " + bound);
}

bool finite_positive(Real x) { return std::isfinite(x) && x > 0; }
bool open_unit(Real x) { return std::isfinite(x) && x > 0 && x < 1; }

}  // namespace

void PlantParams::validate() const {
    require(finite_positive(arm_length), "arm_length", "> 0");
    require(open_unit(itm_transmission), "itm_transmission", "in (0, 1)");
    require(finite_positive(arm_power), "arm_power", "> 0");
    require(finite_positive(bs_power), "bs_power", "> 0");
    require(finite_positive(reduced_mass), "reduced_mass", "> 0");
    require(finite_positive(wavelength), "wavelength", "> 0");
    require(open_unit(r_bs), "r_bs", "in (0, 1)");
    require(std::isfinite(ar_reflectivity) && ar_reflectivity >= 0 && ar_reflectivity < 1, "ar_reflectivity",
            "in [0, 1)");
    require(std::isfinite(lo_power.direct) && lo_power.direct >= 0, "lo_power_direct", ">= 0");
    require(std::isfinite(lo_power.comoving) && lo_power.comoving >= 0, "lo_power_comoving", ">= 0");
    require(std::isfinite(lo_power.bsar) && lo_power.bsar >= 0, "lo_power_bsar", ">= 0");
    require(std::isfinite(homodyne_angle), "homodyne_angle", "finite");
}

Real reduced_mass(Real mass_a, Real mass_b) {
    if (!(mass_a > 0) || !(mass_b > 0)) throw DomainError("masses must be > 0");
    return 1 / (1 / mass_a + 1 / mass_b);
}

Real lo_source_power(const PlantParams& params, LoOption option) {
    const Real r = params.r_bs;
    const Real t = params.t_bs();
    switch (option) {
        case LoOption::Direct: return params.bs_power;
        case LoOption::CoMoving: return 4 * r * t * params.bs_power;
        case LoOption::Bsar: return params.ar_reflectivity * r * params.bs_power;
    }
    return 0;
}

PickOff pickoff(const PlantParams& params, LoOption option) {
    const Real source = lo_source_power(params, option);
    const Real lo = params.lo_power.of(option);
    if (!(source > 0)) throw DomainError("LO source beam carries no power");
    if (lo > source) {
        throw DomainError("lo_power_" + std::string(to_string(option)) +
                          " exceeds the power of its source beam");
    }
    // For the BSAR LO the AR reflection itself is part of the tap.
    const Real fraction = (option == LoOption::Bsar)
                              ? lo / (params.r_bs * params.bs_power)
                              : lo / source;
    return {fraction, 1 - fraction};
}

namespace presets {

PlantParams glasgow_ssm() {
    PlantParams p;
    p.arm_length = 1.3L;
    p.itm_transmission = 700e-6L;
    p.arm_power = 1e3L;
    p.bs_power = 1.7L;
    p.reduced_mass = reduced_mass(glasgow_itm_mass, glasgow_etm_mass);
    p.wavelength = 1064e-9L;
    p.r_bs = 0.5L;
    p.ar_reflectivity = 100e-6L;
    p.lo_power = {10e-3L, 10e-3L, 0.078e-3L};
    p.lo_option = LoOption::CoMoving;
    p.homodyne_angle = constants::pi / 2;
    return p;
}

std::optional<PlantParams> by_name(std::string_view name) {
    if (name == "glasgow-ssm") return glasgow_ssm();
    return std::nullopt;
}

}  // namespace presets

}  // namespace qn
