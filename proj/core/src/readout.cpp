#include "qn/readout.hpp"

#include <cmath>
#include <string>

#include "qn/errors.hpp"

namespace qn {

HomodyneRotation homodyne_matrix(Real phi) {
    const Real c = std::cos(phi);
    const Real s = std::sin(phi);
    return {phi, Mat2{c, -s, s, c}};
}

namespace {

// How the LO noise field l is built from the interferometer fields.
struct LoPath {
    Mat2 from_i;
    Mat2 from_p;
    Quad2 from_xd;
    Quad2 from_xc;
};

LoPath lo_path(LoOption option, const TransferSet& tm, const ResponseSet& rv) {
    switch (option) {
        case LoOption::Direct: return {Mat2::zero(), Mat2::identity(), {}, {}};
        case LoOption::CoMoving: return {tm.r_i, tm.r_p, rv.q_d, rv.q_c};
        case LoOption::Bsar: return {tm.t_i_re, tm.t_p_re, rv.t_d_re, rv.t_c_re};
    }
    return {};
}

}  // namespace

ReadoutChain readout_chain(LoOption option, const PlantParams& params, const CouplingFactors& cf) {
    return readout_chain(option, params.homodyne_angle, params, cf);
}

ReadoutChain readout_chain(LoOption option, Real phi, const PlantParams& params,
                           const CouplingFactors& cf) {
    const DCFields dc = dc_fields(params);
    const Quad2& lo = dc.lo(option);
    if (lo.is_zero()) {
        throw DegenerateLoError("LO '" + std::string(to_string(option)) + "' has zero amplitude");
    }
    const PickOff po = pickoff(params, option);
    const Complex tap = std::sqrt(po.reflectivity);

    const TransferSet tm = transfer_matrices(params, cf);
    const ResponseSet rv = response_vectors(params, cf);
    const LoPath path = lo_path(option, tm, rv);
    const Mat2 h = homodyne_matrix(phi).matrix;

    const Quad2 lo_rot = h * lo;          // H L, used as a row against o
    const Quad2 sig_rot = dc.signal * h;  // O^T H, used as a row against l

    ReadoutChain ch;
    ch.option = option;
    ch.omega = cf.omega;
    ch.phi = phi;
    ch.x_sql = cf.x_sql;
    ch.pump_amplitude = dc.pump.norm();
    ch.lo_amplitude = lo.norm();
    ch.n_i = lo_rot * tm.t_i + tap * (sig_rot * path.from_i);
    ch.n_p = lo_rot * tm.t_p + tap * (sig_rot * path.from_p);
    ch.n_po = std::sqrt(po.transmissivity) * sig_rot.norm();
    ch.s_d = dot(lo_rot, rv.t_d) + tap * dot(sig_rot, path.from_xd);
    ch.s_c = dot(lo_rot, rv.t_c) + tap * dot(sig_rot, path.from_xc);
    return ch;
}

Complex bp_leading_coefficient(LoOption option, Real phi, const PlantParams& params,
                               const CouplingFactors& cf) {
    const Real r = params.r_bs;
    const Real t = params.t_bs();
    const Complex g = std::polar(Real{1}, 2 * cf.beta_sag);
    const Real pump = dc_amplitude(params.bs_power, params.carrier_angular_frequency());
    const Real tap = std::sqrt(pickoff(params, option).reflectivity);
    const Real s = std::sin(phi);
    const Real c = std::cos(phi);

    switch (option) {
        case LoOption::Direct:
            return -4 * (r - t) * g * pump * tap * cf.k_arm * s;
        case LoOption::CoMoving:
            return 2 * std::sqrt(r * t) * (r - t) * g * pump * tap * (cf.k_sym * s - 2 * c);
        case LoOption::Bsar:
            return 2 * std::sqrt(r) * t * (t - r) * g * pump * tap * (cf.k_sym * s - 2 * c);
    }
    return {};
}

}  // namespace qn
