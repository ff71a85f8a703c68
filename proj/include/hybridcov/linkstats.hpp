#pragma once

#include "hybridcov/quadrature.hpp"
#include "hybridcov/scenario.hpp"

namespace hybridcov::linkstats {

/// Normalized sinc, sin(pi x) / (pi x).
double sinc(double x);

/// Mean aggregate interference power (W) at a satellite from active devices in
/// its footprint, by Campbell's theorem with the mean excess gain.
double mean_sat_interference(const Scenario& scn, const quad::Tolerance& tol = {});

/// E[exp(-s I_b)] for the aggregate terrestrial interference at a BS: active
/// devices form a planar PPP of density D lambda_d with Rayleigh fading.
double terr_interference_laplace(double s, const Scenario& scn);

}  // namespace hybridcov::linkstats
