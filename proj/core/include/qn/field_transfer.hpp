#pragma once

#include "qn/coupling.hpp"
#include "qn/plant.hpp"
#include "qn/quadrature.hpp"

namespace qn {

/// Sideband transfer matrices from the dark-port input i and the bright-port
/// input p to the readout port o, the pumping-port return q and the
/// clockwise part b_RE of the output (the field reflected by the AR coating).
struct TransferSet {
    Mat2 t_i, r_i;        // i -> o, i -> q
    Mat2 t_p, r_p;        // p -> o, p -> q
    Mat2 t_i_re, t_p_re;  // i -> b_RE, p -> b_RE
};

/// Responses to differential (x_d) and common (x_c) arm motion, per metre.
struct ResponseSet {
    Quad2 t_d, t_c;        // into o
    Quad2 t_d_re, t_c_re;  // into b_RE
    Quad2 q_d, q_c;        // into q
};

/// Carrier (DC) amplitudes in units where |A|^2 = 2 P / (hbar omega_p),
/// i.e. vacuum quadrature fluctuations have unit spectral density.
struct DCFields {
    Quad2 pump;         // P, on the main beamsplitter, cosine quadrature
    Quad2 signal;       // O = (R - T) P leaking to the readout port
    Quad2 lo_direct;    // sqrt(Rp) P
    Quad2 lo_bsar;      // sqrt(Rp) * (-sqrt(R) P)
    Quad2 lo_comoving;  // sqrt(Rp) * (-2 sqrt(RT) P)
    bool dark_fringe = false;  // O == 0 (symmetric beamsplitter)

    const Quad2& lo(LoOption option) const;
};

TransferSet transfer_matrices(const PlantParams& params, const CouplingFactors& cf);
ResponseSet response_vectors(const PlantParams& params, const CouplingFactors& cf);
DCFields dc_fields(const PlantParams& params);

/// sqrt(2 P / (hbar omega_p)).
Real dc_amplitude(Real power, Real omega_p);
/// Inverse of dc_amplitude.
Real amplitude_power(Real amplitude, Real omega_p);

}  // namespace qn
