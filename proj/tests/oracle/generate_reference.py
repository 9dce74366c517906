"""Reference values for tests/oracle/reference_values.hpp.

Scalar closed forms worked out by hand from the two-photon transfer
matrices (direct and co-moving LO), evaluated at 40 digits with mpmath.
Run: python3 tests/oracle/generate_reference.py > tests/oracle/reference_values.hpp
"""
from mpmath import mp, mpf, sqrt, atan, pi, sin, cos, exp, fabs

mp.dps = 40

c = mpf(299792458)
hbar = mpf("1.054571817e-34")
L = mpf("1.3")
T_itm = mpf("700e-6")
P_arm = mpf(1000)
P_bs = mpf("1.7")
lam = mpf("1064e-9")
M = 1 / (1 / mpf("860e-6") + 1 / mpf("0.1"))
lo = mpf("10e-3")

wp = 2 * pi * c / lam
gamma = c * T_itm / (4 * L)
theta = 4 * wp * P_arm / (M * c * L)
A = sqrt(2 * P_bs / (hbar * wp))


def factors(f):
    W = 2 * pi * f
    beta = atan(W / gamma)
    k_arm = 2 * theta * gamma / (W**2 * (gamma**2 + W**2))
    k_sym = 4 * k_arm * sin(beta) ** 2
    x2 = 2 * hbar / (M * W**2)
    g = exp(2j * (2 * beta + pi / 2))
    return k_arm, k_sym, x2, g


def direct(f, R, phi):
    T = 1 - R
    d = R - T
    k_arm, k_sym, x2, g = factors(f)
    s, co = sin(phi), cos(phi)
    cot = co / s
    rho = lo / P_bs
    s_dp = x2 / 2 * 4 * R * T * (1 + (k_sym - cot) ** 2) / k_sym
    s_bp = x2 * d**2 * (fabs(g * (co - 4 * k_arm * s) + co) ** 2 + s**2 * fabs(g - 1) ** 2) / (2 * k_sym * s**2)
    s_po = x2 / 2 * (1 - rho) * d**2 / (rho * s**2 * k_sym)
    tf = fabs(d) * A * sqrt(x2) * fabs(g * (co - 4 * k_arm * s) + co) / (2 * s * sqrt(2 * k_sym))
    return s_dp, s_bp, s_po, tf


def comoving(f, R, phi):
    T = 1 - R
    d = R - T
    k_arm, k_sym, x2, g = factors(f)
    s, co = sin(phi), cos(phi)
    cot = co / s
    k_star = 4 * R * T * k_sym
    rho = lo / (4 * R * T * P_bs)
    s_dp = x2 / 2 * (1 + (k_star - (8 * R * T - 1) * cot) ** 2) / k_star
    s_bp = x2 / 2 * d**2 * (k_sym - 2 * cot) ** 2 / k_sym
    s_po = x2 / 2 * (1 - rho) / rho * d**2 / (k_star * s**2)
    tf = fabs(d) * A * sqrt(x2) * fabs(k_sym - 2 * cot) / (2 * sqrt(2 * k_sym))
    return s_dp, s_bp, s_po, tf


def emit(name, v):
    print(f"inline constexpr long double {name} = {mp.nstr(v, 25, min_fixed=0, max_fixed=0)}L;")


print("#pragma once\n\n// Generated by generate_reference.py; glasgow-ssm, R_BS = 0.501, f = 100 Hz.\nnamespace qn::oracle::frozen {\n")
emit("gamma_arm", gamma)
emit("theta", theta)
emit("reduced_mass", M)
emit("pump_amplitude", A)
k_arm, k_sym, x2, _ = factors(100)
emit("k_arm_100hz", k_arm)
emit("k_sym_100hz", k_sym)
emit("x_sql_100hz", sqrt(x2))
for tag, fn in (("direct", direct), ("comoving", comoving)):
    for phi_tag, phi in (("pi2", pi / 2), ("pi4", pi / 4)):
        s_dp, s_bp, s_po, tf = fn(100, mpf("0.501"), phi)
        total = s_dp + s_bp + s_po
        pre = f"{tag}_{phi_tag}"
        emit(pre + "_s_dp", s_dp)
        emit(pre + "_s_bp", s_bp)
        emit(pre + "_s_po", s_po)
        emit(pre + "_tf", tf)
        emit(pre + "_rin", sqrt(total) / tf)
print("\n}  // namespace qn::oracle::frozen")
