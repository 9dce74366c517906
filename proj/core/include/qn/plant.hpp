#pragma once

#include <optional>
#include <string_view>

#include "qn/types.hpp"

namespace qn {

enum class LoOption { Direct, Bsar, CoMoving };

std::string_view to_string(LoOption option);
std::optional<LoOption> parse_lo_option(std::string_view text);

/// Local-oscillator power delivered to the homodyne detector, per delivery
/// option, in watts. The pick-off ratio of each option follows from these.
struct LoPowers {
    Real direct = 0;
    Real comoving = 0;
    Real bsar = 0;

    Real of(LoOption option) const;
};

/// Physical configuration of an asymmetric Sagnac speed meter with balanced
/// homodyne readout. Power reflectivity of the main beamsplitter is stored;
/// its transmissivity is 1 - r_bs (lossless).
struct PlantParams {
    Real arm_length = 0;         // m
    Real itm_transmission = 0;   // power transmissivity of the input test mass
    Real arm_power = 0;          // W, circulating in each arm
    Real bs_power = 0;           // W, pump power on the main beamsplitter
    Real reduced_mass = 0;       // kg, dARM reduced mass
    Real wavelength = 0;         // m
    Real r_bs = 0.5L;            // main beamsplitter power reflectivity
    Real ar_reflectivity = 0;    // main beamsplitter AR coating power reflectivity
    LoPowers lo_power;
    LoOption lo_option = LoOption::CoMoving;
    Real homodyne_angle = constants::pi / 2;  // rad

    Real t_bs() const { return 1 - r_bs; }
    Real carrier_angular_frequency() const;

    /// Throws DomainError naming the first offending field.
    void validate() const;
};

/// Two-body reduced mass (1/m_a + 1/m_b)^-1.
Real reduced_mass(Real mass_a, Real mass_b);

/// Pick-off that carves the LO out of its source beam. `reflectivity` is the
/// power fraction sent to the detector; vacuum enters through the open port
/// with weight `transmissivity` = 1 - reflectivity.
struct PickOff {
    Real reflectivity = 0;
    Real transmissivity = 1;
};

/// Power of the beam the LO of `option` is tapped from: the pump for the
/// direct LO, the pumping-port return for the co-moving LO and the AR-coating
/// reflection of the internal beamsplitter field for the BSAR LO.
Real lo_source_power(const PlantParams& params, LoOption option);

/// Throws DomainError if the requested LO power exceeds the source power.
PickOff pickoff(const PlantParams& params, LoOption option);

namespace presets {

inline constexpr Real glasgow_itm_mass = 860e-6L;  // kg
inline constexpr Real glasgow_etm_mass = 0.1L;     // kg

/// Glasgow Sagnac speed-meter prototype: 1.3 m arms, 700 ppm ITMs,
/// 1.7 W on the beamsplitter, ~1 kW per arm, 860 mg / 100 g test masses,
/// 10 mW direct and co-moving LO, 0.078 mW BSAR LO, 100 ppm AR coating.
PlantParams glasgow_ssm();

std::optional<PlantParams> by_name(std::string_view name);

}  // namespace presets

}  // namespace qn
