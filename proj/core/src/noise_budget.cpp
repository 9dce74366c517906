#include "qn/noise_budget.hpp"

#include <cmath>
#include <limits>

#include "qn/errors.hpp"
#include "qn/field_transfer.hpp"

namespace qn {

bool SpectralDensityMatrix::is_positive_semidefinite() const {
    return cc >= 0 && ss >= 0 && cc * ss - cs * cs >= 0;
}

Real quadratic_form(const Quad2& row, const SpectralDensityMatrix& s) {
    const Complex v = row.c * s.cc * std::conj(row.c) + row.c * s.cs * std::conj(row.s) +
                      row.s * s.cs * std::conj(row.c) + row.s * s.ss * std::conj(row.s);
    return v.real();
}

namespace {

NoiseBudgetPoint finish(NoiseBudgetPoint p) {
    p.s_total = p.s_dp + p.s_bp + p.s_po;
    p.asd_total = std::sqrt(p.s_total);
    return p;
}

}  // namespace

NoiseBudgetPoint qnls_general(const ReadoutChain& chain, const SpectralDensityMatrix& s_i,
                              const SpectralDensityMatrix& s_p) {
    const Real gain_sq = std::norm(chain.s_d);
    if (!(gain_sq > 0)) throw NormalizationError("readout has no differential-arm response");

    NoiseBudgetPoint p;
    p.f_hz = angular_to_hz(chain.omega);
    p.x_sql = chain.x_sql;
    p.response_sq = gain_sq;
    p.s_dp = quadratic_form(chain.n_i, s_i) / gain_sq;
    p.s_bp = quadratic_form(chain.n_p, s_p) / gain_sq;
    p.s_po = chain.n_po * chain.n_po / gain_sq;
    return finish(p);
}

NoiseBudgetPoint qnls_closed_form_co(const PlantParams& params, const CouplingFactors& cf, Real phi) {
    const Real s = std::sin(phi);
    if (s == 0) throw NormalizationError("sin(phi) = 0: pick-off noise term is singular");

    const Real r = params.r_bs;
    const Real t = params.t_bs();
    const Real cot = std::cos(phi) / s;
    const Real half_sql = cf.x_sql * cf.x_sql / 2;
    const Real k = cf.k_sym;
    const Real k_star = cf.k_star_sym;
    const Real d2 = (r - t) * (r - t);
    const PickOff po = pickoff(params, LoOption::CoMoving);

    NoiseBudgetPoint p;
    p.f_hz = angular_to_hz(cf.omega);
    p.x_sql = cf.x_sql;
    const Real dp = k_star - (8 * r * t - 1) * cot;
    p.s_dp = half_sql * (1 + dp * dp) / k_star;
    const Real bp = k - 2 * cot;
    p.s_bp = half_sql * d2 * bp * bp / k;
    p.s_po = half_sql * (po.transmissivity / po.reflectivity) * d2 / (k_star * s * s);
    // |L^T t_d|^2 for this LO, so readout_referred() stays meaningful.
    const Real lo_sq = 4 * r * t * po.reflectivity * std::pow(dc_amplitude(params.bs_power,
                           params.carrier_angular_frequency()), 2);
    p.response_sq = lo_sq * 2 * k * s * s / (cf.x_sql * cf.x_sql);
    return finish(p);
}

NoiseBudgetPoint michelson_qnls(const PlantParams& params, const CouplingFactors& cf, Real phi) {
    (void)params;
    const Real s = std::sin(phi);
    if (s == 0) throw NormalizationError("sin(phi) = 0: no signal in the measured quadrature");
    const Real cot = std::cos(phi) / s;
    const Real k = 4 * cf.k_arm;
    const Real half_sql = cf.x_sql * cf.x_sql / 2;

    NoiseBudgetPoint p;
    p.f_hz = angular_to_hz(cf.omega);
    p.x_sql = cf.x_sql;
    const Real u = k - cot;
    p.s_dp = half_sql * (1 + u * u) / k;
    p.response_sq = 2 * k * s * s / (cf.x_sql * cf.x_sql);
    return finish(p);
}

NoiseBudgetPoint noise_budget(LoOption option, const PlantParams& params, Real phi, Real omega) {
    const CouplingFactors cf = coupling_factors(params, omega);
    const ReadoutChain chain = readout_chain(option, phi, params, cf);
    return qnls_general(chain, SpectralDensityMatrix::vacuum(), SpectralDensityMatrix::vacuum());
}

Real laser_tf(const ReadoutChain& chain) {
    const Real gain = std::abs(chain.s_d);
    if (!(gain > 0)) throw NormalizationError("readout has no differential-arm response");
    return std::abs(chain.n_p.c) * chain.pump_amplitude / 2 / gain;
}

Real laser_tf(LoOption option, const PlantParams& params, Real phi, Real omega) {
    const CouplingFactors cf = coupling_factors(params, omega);
    return laser_tf(readout_chain(option, phi, params, cf));
}

Real rin_requirement(const ReadoutChain& chain, const NoiseBudgetPoint& budget) {
    const Real tf = laser_tf(chain);
    if (tf == 0) return std::numeric_limits<Real>::infinity();
    return budget.asd_total / tf;
}

Real rin_requirement(LoOption option, const PlantParams& params, Real phi, Real omega) {
    const CouplingFactors cf = coupling_factors(params, omega);
    const ReadoutChain chain = readout_chain(option, phi, params, cf);
    const NoiseBudgetPoint budget =
        qnls_general(chain, SpectralDensityMatrix::vacuum(), SpectralDensityMatrix::vacuum());
    return rin_requirement(chain, budget);
}

}  // namespace qn
