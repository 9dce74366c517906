#include "qn/app/units.hpp"

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qn::app {

namespace {

struct Unit {
    std::string_view symbol;
    Dimension dim;
    int exp10;
    Real factor = 1;
};

constexpr std::array units{
    Unit{"km", Dimension::Length, 3},     Unit{"m", Dimension::Length, 0},
    Unit{"cm", Dimension::Length, -2},    Unit{"mm", Dimension::Length, -3},
    Unit{"um", Dimension::Length, -6},    Unit{"nm", Dimension::Length, -9},
    Unit{"MW", Dimension::Power, 6},      Unit{"kW", Dimension::Power, 3},
    Unit{"W", Dimension::Power, 0},       Unit{"mW", Dimension::Power, -3},
    Unit{"uW", Dimension::Power, -6},     Unit{"kg", Dimension::Mass, 0},
    Unit{"g", Dimension::Mass, -3},       Unit{"mg", Dimension::Mass, -6},
    Unit{"Hz", Dimension::Frequency, 0},  Unit{"kHz", Dimension::Frequency, 3},
    Unit{"MHz", Dimension::Frequency, 6}, Unit{"rad", Dimension::Angle, 0},
    Unit{"mrad", Dimension::Angle, -3},   Unit{"deg", Dimension::Angle, 0, constants::pi / 180},
    Unit{"%", Dimension::Ratio, -2},      Unit{"ppm", Dimension::Ratio, -6},
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct Split {
    std::string number;
    std::string unit;
};

// Splits "1.3 m" or "1.3m" into number and unit text.
Split split(std::string_view text) {
    const std::string owned(trim(text));
    if (owned.empty()) throw UnitError("empty value");
    char* end = nullptr;
    std::strtold(owned.c_str(), &end);
    const auto consumed = static_cast<std::size_t>(end - owned.c_str());
    const std::string number = owned.substr(0, consumed);
    if (consumed == 0 || number.find_first_of("xXnN") != std::string::npos) {
        throw UnitError("not a number: '" + owned + "'");
    }
    return {number, std::string(trim(std::string_view(owned).substr(consumed)))};
}

// Decimal shift applied to the text so that "700 ppm" reads exactly as 700e-6.
Real to_real(const std::string& number, int exp10) {
    std::string text = number;
    if (exp10 != 0) {
        const auto e = number.find_first_of("eE");
        const long exp = e == std::string::npos ? 0 : std::strtol(number.c_str() + e + 1, nullptr, 10);
        text = number.substr(0, e) + "e" + std::to_string(exp + exp10);
    }
    errno = 0;
    const Real value = std::strtold(text.c_str(), nullptr);
    if (errno == ERANGE || !std::isfinite(value)) throw UnitError("value out of range: '" + number + "'");
    return value;
}

}  // namespace

std::string_view to_string(Dimension dim) {
    switch (dim) {
        case Dimension::Length: return "length";
        case Dimension::Power: return "power";
        case Dimension::Mass: return "mass";
        case Dimension::Frequency: return "frequency";
        case Dimension::Angle: return "angle";
        case Dimension::Ratio: return "ratio";
    }
    return "unknown";
}

Real parse_number(std::string_view text) {
    const Split sp = split(text);
    if (!sp.unit.empty()) throw UnitError("unexpected trailing text '" + sp.unit + "'");
    return to_real(sp.number, 0);
}

Real parse_quantity(std::string_view text, Dimension dim) {
    const Split sp = split(text);
    if (sp.unit.empty()) {
        if (dim == Dimension::Ratio) return to_real(sp.number, 0);
        throw UnitError("missing unit (expected a " + std::string(to_string(dim)) + " unit)");
    }
    for (const Unit& u : units) {
        if (u.symbol == sp.unit) {
            if (u.dim != dim) {
                throw UnitError("unit '" + sp.unit + "' is not a " + std::string(to_string(dim)) + " unit");
            }
            return to_real(sp.number, u.exp10) * u.factor;
        }
    }
    throw UnitError("unknown unit '" + sp.unit + "'");
}

}  // namespace qn::app
