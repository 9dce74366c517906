#include "qn/field_transfer.hpp"

#include <cmath>

#include "qn/errors.hpp"

namespace qn {

namespace {

Complex phase(Real angle) { return std::polar(Real{1}, angle); }

const Complex I{0, 1};

}  // namespace

const Quad2& DCFields::lo(LoOption option) const {
    switch (option) {
        case LoOption::Direct: return lo_direct;
        case LoOption::Bsar: return lo_bsar;
        case LoOption::CoMoving: return lo_comoving;
    }
    return lo_direct;
}

TransferSet transfer_matrices(const PlantParams& params, const CouplingFactors& cf) {
    const Real r = params.r_bs;
    const Real t = params.t_bs();
    const Complex g = phase(2 * cf.beta_sag);
    const Real split = 2 * std::sqrt(r * t);
    const Real imbalance = r - t;

    TransferSet m;
    m.t_i = Mat2::unit_lower(split * g, -cf.k_sym);
    m.r_i = Mat2::unit_lower(imbalance * g, 0);
    m.t_p = Mat2::unit_lower(imbalance * g, -4 * cf.k_arm);
    m.r_p = Mat2::unit_lower(-split * g, -cf.k_asym);
    m.t_i_re = Mat2::unit_lower(std::sqrt(t) * g, -2 * r * cf.k_sym);
    m.t_p_re = Mat2::unit_lower(std::sqrt(r) * g, 4 * cf.k_arm - 2 * t * cf.k_sym);
    return m;
}

ResponseSet response_vectors(const PlantParams& params, const CouplingFactors& cf) {
    const Real r = params.r_bs;
    const Real t = params.t_bs();
    const Complex e = phase(cf.beta_sag);
    const Real x = cf.x_sql;
    const Real root_sym = std::sqrt(2 * cf.k_sym);
    const Real root_asym = std::sqrt(2 * cf.k_asym);

    auto sine = [](Complex v) { return Quad2{0, v}; };

    ResponseSet v;
    v.t_d = sine(-e * root_sym / x);
    v.t_c = sine(I * e * (r - t) * root_asym / x);
    v.t_d_re = sine(e * std::sqrt(r) * root_sym / x);
    v.t_c_re = sine(-I * e * std::sqrt(r) * root_asym / x);
    v.q_d = Quad2{};
    // Carries a factor i relative to the common-mode response into o so that
    // the co-moving readout is blind to x_c.
    v.q_c = sine(-I * e * (2 * std::sqrt(r * t)) * root_asym / x);
    return v;
}

Real dc_amplitude(Real power, Real omega_p) {
    if (!(power >= 0) || !(omega_p > 0)) throw DomainError("power must be >= 0, omega_p > 0");
    return std::sqrt(2 * power / (constants::hbar * omega_p));
}

Real amplitude_power(Real amplitude, Real omega_p) {
    return constants::hbar * omega_p * amplitude * amplitude / 2;
}

DCFields dc_fields(const PlantParams& params) {
    params.validate();
    const Real r = params.r_bs;
    const Real t = params.t_bs();
    const Real a = dc_amplitude(params.bs_power, params.carrier_angular_frequency());

    DCFields dc;
    dc.pump = {a, 0};
    dc.signal = Complex(r - t) * dc.pump;
    dc.dark_fringe = dc.signal.is_zero();

    const auto tap = [&](LoOption o) { return std::sqrt(pickoff(params, o).reflectivity); };
    dc.lo_direct = Complex(tap(LoOption::Direct)) * dc.pump;
    dc.lo_bsar = Complex(-tap(LoOption::Bsar) * std::sqrt(r)) * dc.pump;
    dc.lo_comoving = Complex(-tap(LoOption::CoMoving) * 2 * std::sqrt(r * t)) * dc.pump;
    return dc;
}

}  // namespace qn
