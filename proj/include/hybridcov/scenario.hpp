#pragma once

#include "hybridcov/channel.hpp"
#include "hybridcov/constellation.hpp"
#include "hybridcov/geomodel.hpp"

namespace hybridcov {

/// Residual interference left by the access scheme and the fraction of
/// devices transmitting at once.
struct AccessModel {
    double kappa_sat = 0.01;  // -20 dB
    double kappa_bs = 0.01;   // -20 dB
    double duty_cycle = 0.01; // 1 %

    void validate() const;
};

/// Full parameter bundle for one evaluation point. All fields in SI units.
struct Scenario {
    EarthGeometry geo;
    ConstellationConfig cfg;
    GroundDensities dens;
    SatChannelModel sat;
    TerrChannelModel terr;
    RadioParams radio;
    AccessModel access;
    WalkerConfig walker;

    /// Recomputes derived fields (the terrestrial path-gain constant follows
    /// the satellite carrier frequency). Call after editing sat.carrier_frequency.
    void sync();
    /// Throws ConfigError naming the first invalid field.
    void validate() const;
};

/// Default parameter set: h = 500 km, f = 2 GHz, 23 dBm EIRP, -20 dB target SINR,
/// isotropic satellite beam, 500 satellites, 0.01 BS and 1 device per km^2.
Scenario default_scenario();

}  // namespace hybridcov
