#include <gtest/gtest.h>

#include "qn/errors.hpp"
#include "qn/readout.hpp"

using namespace qn;

namespace {

PlantParams plant(Real r_bs) {
    PlantParams p = presets::glasgow_ssm();
    p.r_bs = r_bs;
    return p;
}

ReadoutChain chain(LoOption o, Real r_bs, Real phi, Real f_hz) {
    const PlantParams p = plant(r_bs);
    return readout_chain(o, phi, p, coupling_factors(p, hz_to_angular(f_hz)));
}

// Size of the common-mode response carried by the LO term alone; the
// cancellation in s_c happens against a number of this size.
Real common_mode_scale(LoOption o, Real r_bs, Real phi, Real f_hz) {
    const PlantParams p = plant(r_bs);
    const CouplingFactors cf = coupling_factors(p, hz_to_angular(f_hz));
    const ResponseSet r = response_vectors(p, cf);
    const Quad2& t_c = o == LoOption::Bsar ? r.t_c_re : r.t_c;
    (void)phi;
    return dc_fields(p).lo(o).norm() * t_c.norm();
}

}  // namespace

TEST(Readout, UsesPlantHomodyneAngleByDefault) {
    PlantParams p = plant(0.501L);
    p.homodyne_angle = constants::pi / 3;
    const CouplingFactors cf = coupling_factors(p, hz_to_angular(100));
    const ReadoutChain a = readout_chain(LoOption::CoMoving, p, cf);
    const ReadoutChain b = readout_chain(LoOption::CoMoving, constants::pi / 3, p, cf);
    EXPECT_EQ(a.s_d, b.s_d);
    EXPECT_EQ(a.n_p, b.n_p);
    EXPECT_EQ(a.phi, constants::pi / 3);
}

TEST(Readout, CommonModeCancelsForCoMovingAndBsar) {
    for (LoOption o : {LoOption::CoMoving, LoOption::Bsar}) {
        for (Real r : {0.501L, 0.51L, 0.6L}) {
            for (Real f : {1.0L, 100.0L, 1e4L}) {
                const Real scale = common_mode_scale(o, r, constants::pi / 2, f);
                ASSERT_GT(scale, 0);
                EXPECT_LE(std::abs(chain(o, r, constants::pi / 2, f).s_c), 8 * 1.1e-19L * scale)
                    << to_string(o) << " r=" << static_cast<double>(r) << " f=" << static_cast<double>(f);
            }
        }
    }
}

TEST(Readout, DirectLoSeesCommonMode) {
    const ReadoutChain c = chain(LoOption::Direct, 0.6L, constants::pi / 2, 100);
    EXPECT_GT(std::abs(c.s_c), 1e-3L * std::abs(c.s_d));
    EXPECT_EQ(chain(LoOption::Direct, 0.5L, constants::pi / 2, 100).s_c, Complex{});
}

TEST(Readout, CoMovingResponseAtEqualTapFraction) {
    // Same pick-off fraction for both LOs: |s_d^co| / |s_d^dir| = 2 sqrt(RT).
    PlantParams p = plant(0.6L);
    p.lo_power.comoving = p.lo_power.direct * 4 * 0.6L * 0.4L;
    const CouplingFactors cf = coupling_factors(p, hz_to_angular(100));
    const Real co = std::abs(readout_chain(LoOption::CoMoving, p, cf).s_d);
    const Real dir = std::abs(readout_chain(LoOption::Direct, p, cf).s_d);
    EXPECT_NEAR(co / dir, std::sqrt(4 * 0.6L * 0.4L), 1e-15L);
}

TEST(Readout, ZeroLoPowerIsDegenerate) {
    PlantParams p = plant(0.501L);
    p.lo_power.direct = 0;
    EXPECT_THROW(readout_chain(LoOption::Direct, p, coupling_factors(p, hz_to_angular(10))), DegenerateLoError);
}

TEST(Readout, PickOffVacuumWeight) {
    const PlantParams p = plant(0.501L);
    const ReadoutChain c = readout_chain(LoOption::Direct, p, coupling_factors(p, hz_to_angular(10)));
    const DCFields dc = dc_fields(p);
    const Real t_p = pickoff(p, LoOption::Direct).transmissivity;
    EXPECT_NEAR(c.n_po, std::sqrt(t_p) * dc.signal.norm(), 1e-12L * c.n_po);
}

TEST(Readout, LeadingBackActionCoefficient) {
    for (Real phi : {constants::pi / 2, constants::pi / 4, constants::pi / 3}) {
        const PlantParams p = plant(0.501L);
        const CouplingFactors cf = coupling_factors(p, hz_to_angular(1));
        const ReadoutChain co = readout_chain(LoOption::CoMoving, phi, p, cf);
        const Complex expect_co = bp_leading_coefficient(LoOption::CoMoving, phi, p, cf);
        EXPECT_LT(std::abs(co.n_p.c - expect_co), 1e-9L * std::abs(expect_co));
        EXPECT_LT(std::abs(co.n_p.s), 1e-9L * std::abs(expect_co));

        const ReadoutChain dir = readout_chain(LoOption::Direct, phi, p, cf);
        const Complex expect_dir = bp_leading_coefficient(LoOption::Direct, phi, p, cf);
        // Subleading terms are O(1 / K_arm) ~ 4e-8 at 1 Hz.
        EXPECT_LT(std::abs(dir.n_p.c - expect_dir), 1e-6L * std::abs(expect_dir));
    }
}

TEST(Readout, LeadingBackActionCoefficientBsarQuarterTurn) {
    const PlantParams p = plant(0.501L);
    const CouplingFactors cf = coupling_factors(p, hz_to_angular(1));
    const ReadoutChain ar = readout_chain(LoOption::Bsar, constants::pi / 2, p, cf);
    const Complex expect = bp_leading_coefficient(LoOption::Bsar, constants::pi / 2, p, cf);
    EXPECT_LT(std::abs(std::abs(ar.n_p.c) - std::abs(expect)), 1e-9L * std::abs(expect));
}
