#pragma once

#include "qn/coupling.hpp"
#include "qn/field_transfer.hpp"
#include "qn/plant.hpp"
#include "qn/quadrature.hpp"

namespace qn {

/// Homodyne rotation [[cos, -sin], [sin, cos]]; phi = pi/2 reads the phase quadrature.
struct HomodyneRotation {
    Real phi = 0;
    Mat2 matrix = Mat2::identity();
};

HomodyneRotation homodyne_matrix(Real phi);

/// Linear map from the input fluctuations and mirror motion to the balanced
/// homodyne photocurrent at one sideband frequency, with unit detector gain:
///
///   I = n_i^T i + n_p^T p + n_po v + s_d x_d + s_c x_c
///
/// where v is the vacuum entering the open port of the LO pick-off.
/// The homodyne rotation is absorbed into the LO and signal DC fields.
struct ReadoutChain {
    LoOption option = LoOption::CoMoving;
    Real omega = 0;
    Real phi = 0;
    Real x_sql = 0;
    Real pump_amplitude = 0;  // |P|; converts relative power noise to p_c
    Real lo_amplitude = 0;    // |L|
    Quad2 n_i;
    Quad2 n_p;
    Real n_po = 0;
    Complex s_d{};
    Complex s_c{};
};

/// Builds the chain for `option` using params.homodyne_angle.
/// Throws DegenerateLoError if the LO has no DC amplitude.
ReadoutChain readout_chain(LoOption option, const PlantParams& params, const CouplingFactors& cf);

/// Same, with an explicit homodyne angle.
ReadoutChain readout_chain(LoOption option, Real phi, const PlantParams& params,
                           const CouplingFactors& cf);

/// Low-frequency leading coefficient of p_c in the photocurrent, in the same
/// units as ReadoutChain::n_p.c:
///   direct    -4 (R-T) e^{2i beta_sag} |P| sqrt(Rp) K_arm sin(phi)
///   co-moving 2 sqrt(RT) (R-T) e^{2i beta_sag} |P| sqrt(Rp) (K_sym sin(phi) - 2 cos(phi))
///   BSAR      2 sqrt(R) T (T-R) e^{2i beta_sag} |P| sqrt(Rp) (K_sym sin(phi) - 2 cos(phi))
Complex bp_leading_coefficient(LoOption option, Real phi, const PlantParams& params,
                               const CouplingFactors& cf);

}  // namespace qn
