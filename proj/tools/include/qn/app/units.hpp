#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qn/types.hpp"

namespace qn::app {

enum class Dimension { Length, Power, Mass, Frequency, Angle, Ratio };

std::string_view to_string(Dimension dim);

class UnitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "<number> <unit>" into SI (rad for angles). The unit is mandatory
/// for every dimension except Ratio, which also accepts "%" and "ppm".
Real parse_quantity(std::string_view text, Dimension dim);

/// Parses a bare number; trailing garbage is an error.
Real parse_number(std::string_view text);

}  // namespace qn::app
