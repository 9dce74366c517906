#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qn/plant.hpp"

namespace qn::app {

/// Parse or validation failure. `line` is 0 when the error is not tied to a
/// line of the input (e.g. a missing required field).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class Spacing { Log, Linear };
enum class OutputKind { Qnls, Tf, Rin, Budget, Michelson };
enum class Format { Csv, Json };

std::string_view to_string(Spacing spacing);
std::string_view to_string(OutputKind kind);
std::string_view to_string(Format format);
std::optional<OutputKind> parse_output_kind(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

struct Grid {
    Real f_min = 1;      // Hz
    Real f_max = 1e5L;   // Hz
    std::size_t points = 1000;
    Spacing spacing = Spacing::Log;

    /// Sample frequencies in Hz; both endpoints are exact.
    std::vector<Real> frequencies() const;
    void validate() const;
};

struct Scenario {
    std::string name;
    LoOption lo_option = LoOption::CoMoving;
    Real phi = constants::pi / 2;
    std::optional<Real> r_bs;
};

struct RunConfig {
    PlantParams plant;
    Grid grid;
    std::vector<Scenario> scenarios;
    std::vector<OutputKind> outputs{OutputKind::Qnls};
    std::string output_path = ".";
    Format format = Format::Csv;

    void validate() const;
};

/// Values supplied on the command line; each one wins over the config file.
struct Overrides {
    std::optional<std::string> preset;
    std::optional<Real> r_bs;
    std::optional<LoOption> lo_option;
    std::optional<Real> phi;
    std::optional<std::string> output_path;
    std::optional<Format> format;
};

/// Parses the sectioned `key = value` grammar:
///
///   # comment
///   [plant]      preset, arm_length, itm_transmission, arm_power, bs_power,
///                itm_mass, etm_mass, reduced_mass, wavelength, r_bs,
///                ar_reflectivity, lo_power_direct, lo_power_comoving,
///                lo_power_bsar, lo_option, homodyne_angle
///   [grid]       f_min, f_max, points, spacing
///   [scenario]   name, lo, phi, r_bs          (repeatable)
///   [output]     quantities, path, format
///
/// Dimensioned values need a unit ("1.3 m", "700 ppm", "10 mW", "0.785 rad").
/// Without a preset every plant field except r_bs, lo_option and
/// homodyne_angle must be given. reduced_mass wins over itm_mass/etm_mass.
/// With no [scenario] section one scenario is built from the plant's
/// lo_option and homodyne_angle.
RunConfig parse_config(std::string_view text, const Overrides& overrides = {});

}  // namespace qn::app
