#include <gtest/gtest.h>

#include "qn/app/units.hpp"

using namespace qn;
using namespace qn::app;

TEST(Units, ParsesWithAndWithoutSpace) {
    EXPECT_EQ(parse_quantity("1.3 m", Dimension::Length), 1.3L);
    EXPECT_EQ(parse_quantity("1.3m", Dimension::Length), 1.3L);
    EXPECT_EQ(parse_quantity("  10 mW ", Dimension::Power), 10e-3L);
    EXPECT_EQ(parse_quantity("860 mg", Dimension::Mass), 860e-6L);
    EXPECT_EQ(parse_quantity("0.078 mW", Dimension::Power), 0.078e-3L);
    EXPECT_EQ(parse_quantity("2.5e-1 kW", Dimension::Power), 250);
    EXPECT_EQ(parse_quantity("1 kHz", Dimension::Frequency), 1000);
    EXPECT_EQ(parse_quantity("1064 nm", Dimension::Length), 1064e-9L);
    EXPECT_EQ(parse_quantity("-2.5e3 Hz", Dimension::Frequency), -2500);
}

TEST(Units, Ratios) {
    EXPECT_EQ(parse_quantity("0.501", Dimension::Ratio), 0.501L);
    EXPECT_EQ(parse_quantity("700 ppm", Dimension::Ratio), 700e-6L);
    EXPECT_EQ(parse_quantity("50 %", Dimension::Ratio), 0.5L);
}

TEST(Units, Angles) {
    EXPECT_EQ(parse_quantity("0.5 rad", Dimension::Angle), 0.5L);
    EXPECT_EQ(parse_quantity("90 deg", Dimension::Angle), 90 * (constants::pi / 180));
}

TEST(Units, MissingUnitIsAnError) {
    EXPECT_THROW(parse_quantity("1.3", Dimension::Length), UnitError);
    EXPECT_THROW(parse_quantity("0.785", Dimension::Angle), UnitError);
}

TEST(Units, WrongOrUnknownUnit) {
    EXPECT_THROW(parse_quantity("1.3 W", Dimension::Length), UnitError);
    EXPECT_THROW(parse_quantity("1.3 furlong", Dimension::Length), UnitError);
    EXPECT_THROW(parse_quantity("10 mv", Dimension::Power), UnitError);
    EXPECT_THROW(parse_quantity("m", Dimension::Length), UnitError);
    EXPECT_THROW(parse_quantity("", Dimension::Length), UnitError);
    EXPECT_THROW(parse_quantity("inf m", Dimension::Length), UnitError);
}

TEST(Units, BareNumbers) {
    EXPECT_EQ(parse_number("42"), 42);
    EXPECT_THROW(parse_number("42 m"), UnitError);
    EXPECT_THROW(parse_number("x"), UnitError);
    EXPECT_THROW(parse_number("0x10"), UnitError);
    EXPECT_THROW(parse_number("nan"), UnitError);
    EXPECT_THROW(parse_number("1e9999"), UnitError);
}
