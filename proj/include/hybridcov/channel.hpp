#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "hybridcov/geomodel.hpp"
#include "hybridcov/rng.hpp"

namespace hybridcov {

/// Ground-to-satellite channel: free space, air absorption and a two-component
/// (LoS / NLoS) Gaussian mixture for the excess path gain in dB.
struct SatChannelModel {
    static constexpr double rho = std::numbers::ln10 / 10.0;

    double carrier_frequency = 2e9;   // Hz
    double air_absorption_gain = 1.0; // linear, (0, 1]
    double los_beta = 2.3;
    double mu_los = 0.0;              // dB
    double sigma_los = 2.8;           // dB
    double mu_nlos = 12.0;            // dB
    double sigma_nlos = 9.0;          // dB

    double path_gain_constant() const;
    void validate() const;
};

/// Log-distance terrestrial channel with Rayleigh fading.
struct TerrChannelModel {
    double path_loss_exponent = 3.68;
    double model_constant = 1.0;
    /// c^2 / (4 pi f)^2 for the shared carrier; kept in sync by Scenario.
    double path_gain_constant = 0.0;

    void validate() const;
};

/// Device and receiver parameters, linear SI units.
struct RadioParams {
    double eirp = 0.19952623149688797;         // 23 dBm
    double target_sinr = 0.01;                 // -20 dB
    double sat_noise = 1e-16;                  // -130 dBm
    double bs_noise = 1.9952623149688797e-15;  // -117 dBm

    void validate() const;
};

namespace channel {

/// c^2 / (4 pi f)^2, in m^2.
double path_gain_constant(double carrier_frequency);

double freespace_gain(double phi, const EarthGeometry& geo, const SatChannelModel& sat);

/// Exponent t of the LoS probability exp(-t) at Earth-centered angle phi.
/// Infinite at and beyond the horizon.
inline double los_exponent(double phi, const EarthGeometry& geo, const SatChannelModel& sat) {
    const double denom = std::cos(phi) - geo.alpha();
    if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
    return sat.los_beta * std::sin(phi) / denom;
}

double los_probability(double phi, const EarthGeometry& geo, const SatChannelModel& sat);
/// Same law parameterized by the user elevation angle: exp(-beta cot(theta)).
double los_probability_from_elevation(double theta, const SatChannelModel& sat);

double excess_gain_mean(double p_los, const SatChannelModel& sat);
double excess_gain_mean(double phi, const EarthGeometry& geo, const SatChannelModel& sat);

/// CDF of the linear excess gain. Throws std::domain_error for x <= 0.
double excess_gain_cdf(double x, double p_los, const SatChannelModel& sat);
double excess_gain_cdf(double x, double phi, const EarthGeometry& geo, const SatChannelModel& sat);
/// 1 - CDF, evaluated through erfc so small tail probabilities keep precision.
/// Accepts x = 0 (returns 1).
double excess_gain_survival(double x, double p_los, const SatChannelModel& sat);

/// Excess gain draw given the LoS exponent t; the LoS component is picked with
/// probability exp(-t) by comparing a unit exponential against t.
template <class URNG>
double sample_excess_gain_from_exponent(double los_exp, const SatChannelModel& sat, URNG& rng) {
    boost::random::exponential_distribution<double> unit_exp(1.0);
    boost::random::normal_distribution<double> std_normal(0.0, 1.0);
    const bool los = unit_exp(rng) > los_exp;
    const double mu = los ? sat.mu_los : sat.mu_nlos;
    const double sigma = los ? sat.sigma_los : sat.sigma_nlos;
    const double z = std_normal(rng);
    return std::exp(SatChannelModel::rho * (sigma * z - mu));
}

template <class URNG>
double sample_excess_gain(double phi, const EarthGeometry& geo, const SatChannelModel& sat, URNG& rng) {
    return sample_excess_gain_from_exponent(los_exponent(phi, geo, sat), sat, rng);
}

/// b l_o r^-a. Throws std::domain_error for r <= 0.
double terrestrial_gain(double r, const TerrChannelModel& terr);

/// Rayleigh power fading: unit-mean exponential.
template <class URNG>
double sample_fading(URNG& rng) {
    boost::random::exponential_distribution<double> unit_exp(1.0);
    return unit_exp(rng);
}

}  // namespace channel
}  // namespace hybridcov
