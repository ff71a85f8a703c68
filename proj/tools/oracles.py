"""Independent high-precision reference values for the unit tests.

Evaluates the coverage integrals directly in their original variables (angle
and distance) with mpmath, sharing no code with the C++ library. Run it and
paste the printed block into tests/oracle_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 30

R = mp.mpf(6371e3)
H = mp.mpf(500e3)
RO = R + H
ALPHA = R / RO
C = mp.mpf(299792458)
F = mp.mpf(2e9)
LO = (C / (4 * mp.pi * F)) ** 2
BETA = mp.mpf("2.3")
MU_L, SIG_L, MU_N, SIG_N = mp.mpf(0), mp.mpf("2.8"), mp.mpf(12), mp.mpf(9)
RHO = mp.log(10) / 10
P = mp.mpf(10) ** (mp.mpf(23 - 30) / 10)
GAMMA = mp.mpf("0.01")
WS = mp.mpf(10) ** (mp.mpf(-130 - 30) / 10)
WB = mp.mpf(10) ** (mp.mpf(-117 - 30) / 10)
KAPPA = mp.mpf("0.01")
D = mp.mpf("0.01")
A = mp.mpf("3.68")
B = mp.mpf(1)
PHI_M = mp.acos(ALPHA)


def slant(phi):
    return mp.sqrt(R**2 + RO**2 - 2 * R * RO * mp.cos(phi))


def plos(phi):
    den = mp.cos(phi) - ALPHA
    if den <= 0:
        return mp.mpf(0)
    return mp.exp(-BETA * mp.sin(phi) / den)


def zeta_mean(phi):
    p = plos(phi)
    return p * mp.exp(RHO**2 * SIG_L**2 / 2 - RHO * MU_L) + (1 - p) * mp.exp(RHO**2 * SIG_N**2 / 2 - RHO * MU_N)


def zeta_cdf(x, phi):
    p = plos(phi)
    xdb = 10 * mp.log10(x)
    return mp.mpf(1) / 2 + p / 2 * mp.erf((xdb + MU_L) / (mp.sqrt(2) * SIG_L)) + (1 - p) / 2 * mp.erf(
        (xdb + MU_N) / (mp.sqrt(2) * SIG_N))


def mean_sat_interference(lambda_d):
    f = lambda phi: KAPPA * LO / slant(phi) ** 2 * zeta_mean(phi) * mp.sin(phi)
    return 2 * mp.pi * R**2 * D * lambda_d * P * mp.quad(f, [0, PHI_M / 4, PHI_M / 2, PHI_M])


def sat_coverage(n, lambda_d):
    ibar = mean_sat_interference(lambda_d)

    def f(phi):
        x = GAMMA * (ibar + WS) / (P * LO / slant(phi) ** 2)
        pdf = n / 2 * mp.sin(phi) * mp.exp(-n / 2 * (1 - mp.cos(phi)))
        return (1 - zeta_cdf(x, phi)) * pdf

    pts = [0] + [PHI_M * k / 64 for k in (1, 2, 4, 8, 16, 32)] + [PHI_M]
    return mp.quad(f, pts)


def sinc(x):
    return mp.sin(mp.pi * x) / (mp.pi * x)


def terr_coverage(lambda_b, lambda_d, wb=WB):
    def f(r):
        s = GAMMA * r**A / (P * B * LO)
        lt = mp.exp(-mp.pi * D * lambda_d * (KAPPA * P * B * LO * s) ** (2 / A) / sinc(2 / A))
        return lt * mp.exp(-s * wb) * 2 * mp.pi * lambda_b * r * mp.exp(-mp.pi * lambda_b * r**2)

    scale = 1 / mp.sqrt(mp.pi * lambda_b)
    return mp.quad(f, [0, scale / 4, scale, 4 * scale, 16 * scale, mp.inf])


def closed_form(lambda_b, lambda_d):
    return lambda_b / (lambda_b + D * lambda_d * (KAPPA * GAMMA) ** (2 / A) / sinc(2 / A))


def main():
    km2 = mp.mpf("1e-6")
    rows = {
        "kIbarLd1": mean_sat_interference(1 * km2),
        "kIbarLd01": mean_sat_interference(mp.mpf("0.1") * km2),
        "kSatN500Ld1": sat_coverage(500, 1 * km2),
        "kSatN200Ld01": sat_coverage(200, mp.mpf("0.1") * km2),
        "kSatN1000Ld01": sat_coverage(1000, mp.mpf("0.1") * km2),
        "kTerrLb001Ld1": terr_coverage(mp.mpf("0.01") * km2, 1 * km2),
        "kTerrLb1Ld10": terr_coverage(1 * km2, 10 * km2),
        "kTerrClosedLd100Lb": closed_form(1, 100),
        "kTerrNoNoiseLb01Ld10": terr_coverage(mp.mpf("0.1") * km2, 10 * km2, wb=0),
        "kHybridGapLb1em12": terr_coverage(mp.mpf("1e-12"), 1 * km2) * (1 - sat_coverage(500, 1 * km2)),
        "kHybridGapLb1em18": terr_coverage(mp.mpf("1e-18"), 1 * km2) * (1 - sat_coverage(500, 1 * km2)),
        "kSinc2OverA": sinc(2 / A),
        "kPathGainConst": LO,
    }
    for name, value in rows.items():
        print(f"inline constexpr double {name} = {mp.nstr(value, 17)};")


if __name__ == "__main__":
    main()
