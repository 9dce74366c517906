#pragma once

#include "qn/coupling.hpp"
#include "qn/plant.hpp"
#include "qn/readout.hpp"

namespace qn {

/// Single-sided spectral density matrix of an input field's quadratures.
/// Vacuum is the identity.
struct SpectralDensityMatrix {
    Real cc = 1;
    Real cs = 0;
    Real ss = 1;

    static SpectralDensityMatrix vacuum() { return {}; }
    bool is_positive_semidefinite() const;
};

/// Quantum noise at one frequency, referred to differential arm displacement
/// (m^2/Hz). `response_sq` = |s_d|^2 converts back to the photocurrent.
struct NoiseBudgetPoint {
    Real f_hz = 0;
    Real s_dp = 0;  // dark-port input
    Real s_bp = 0;  // bright-port (laser) input
    Real s_po = 0;  // pick-off open-port vacuum
    Real s_total = 0;
    Real asd_total = 0;
    Real x_sql = 0;
    Real response_sq = 0;

    /// Photocurrent-referred PSD of a displacement-referred component.
    Real readout_referred(Real s) const { return s * response_sq; }
};

/// N S N^dagger for a readout row N.
Real quadratic_form(const Quad2& row, const SpectralDensityMatrix& s);

/// Displacement-referred QNLS from the readout chain, for arbitrary input
/// spectra. Throws NormalizationError if the chain has no dARM response.
NoiseBudgetPoint qnls_general(const ReadoutChain& chain, const SpectralDensityMatrix& s_i,
                              const SpectralDensityMatrix& s_p);

/// Closed-form co-moving QNLS for vacuum inputs. Throws NormalizationError
/// when sin(phi) = 0.
NoiseBudgetPoint qnls_closed_form_co(const PlantParams& params, const CouplingFactors& cf, Real phi);

/// Tuned Michelson with the same Theta, gamma and M, with K_MI = 4 K_arm:
/// (x_SQL^2 / 2) (1 + (K_MI - cot phi)^2) / K_MI.
NoiseBudgetPoint michelson_qnls(const PlantParams& params, const CouplingFactors& cf, Real phi);

/// Vacuum-input budget via the readout chain.
NoiseBudgetPoint noise_budget(LoOption option, const PlantParams& params, Real phi, Real omega);

/// Displacement-equivalent response to relative pump power fluctuations
/// dP/P (metres per unit RIN). A relative fluctuation maps to the amplitude
/// quadrature as p_c = (dP/P) |P| / 2.
Real laser_tf(const ReadoutChain& chain);
Real laser_tf(LoOption option, const PlantParams& params, Real phi, Real omega);

/// Laser RIN (1/sqrt(Hz)) whose contribution equals the quantum noise.
/// Returns +inf where the transfer function vanishes.
Real rin_requirement(const ReadoutChain& chain, const NoiseBudgetPoint& budget);
Real rin_requirement(LoOption option, const PlantParams& params, Real phi, Real omega);

}  // namespace qn
