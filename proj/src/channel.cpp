#include "hybridcov/channel.hpp"

#include <algorithm>
#include <stdexcept>

#include "hybridcov/errors.hpp"
#include "hybridcov/units.hpp"

namespace hybridcov {

double SatChannelModel::path_gain_constant() const {
    return channel::path_gain_constant(carrier_frequency);
}

void SatChannelModel::validate() const {
    if (!(carrier_frequency > 0.0)) throw ConfigError("carrier_frequency", "must be positive");
    if (!(air_absorption_gain > 0.0 && air_absorption_gain <= 1.0))
        throw ConfigError("air_absorption", "linear gain must lie in (0, 1], i.e. <= 0 dB");
    if (!(los_beta >= 0.0)) throw ConfigError("los_beta", "must be non-negative");
    if (!std::isfinite(mu_los)) throw ConfigError("mu_los", "must be finite");
    if (!std::isfinite(mu_nlos)) throw ConfigError("mu_nlos", "must be finite");
    if (!(sigma_los > 0.0)) throw ConfigError("sigma_los", "must be positive");
    if (!(sigma_nlos > 0.0)) throw ConfigError("sigma_nlos", "must be positive");
}

void TerrChannelModel::validate() const {
    if (!(path_loss_exponent > 2.0)) throw ConfigError("path_loss_exponent", "must exceed 2");
    if (!(model_constant > 0.0)) throw ConfigError("model_constant", "must be positive");
    if (!(path_gain_constant > 0.0)) throw ConfigError("carrier_frequency", "terrestrial path-gain constant unset");
}

void RadioParams::validate() const {
    if (!(eirp > 0.0)) throw ConfigError("eirp", "must be positive");
    if (!(target_sinr > 0.0)) throw ConfigError("target_sinr", "must be positive");
    if (!(sat_noise > 0.0)) throw ConfigError("sat_noise", "must be positive");
    if (!(bs_noise > 0.0)) throw ConfigError("bs_noise", "must be positive");
}

namespace channel {

double path_gain_constant(double carrier_frequency) {
    const double k = units::speed_of_light / (4.0 * units::pi * carrier_frequency);
    return k * k;
}

double freespace_gain(double phi, const EarthGeometry& geo, const SatChannelModel& sat) {
    const double d = geo::slant_range(phi, geo);
    return sat.path_gain_constant() * sat.air_absorption_gain / (d * d);
}

double los_probability(double phi, const EarthGeometry& geo, const SatChannelModel& sat) {
    return std::exp(-los_exponent(phi, geo, sat));
}

double los_probability_from_elevation(double theta, const SatChannelModel& sat) {
    if (!(theta > 0.0)) return 0.0;
    return std::exp(-sat.los_beta / std::tan(theta));
}

double excess_gain_mean(double p_los, const SatChannelModel& sat) {
    constexpr double rho = SatChannelModel::rho;
    const double m_los = std::exp(0.5 * rho * rho * sat.sigma_los * sat.sigma_los - rho * sat.mu_los);
    const double m_nlos = std::exp(0.5 * rho * rho * sat.sigma_nlos * sat.sigma_nlos - rho * sat.mu_nlos);
    return p_los * m_los + (1.0 - p_los) * m_nlos;
}

double excess_gain_mean(double phi, const EarthGeometry& geo, const SatChannelModel& sat) {
    return excess_gain_mean(los_probability(phi, geo, sat), sat);
}

namespace {

// erf((x_db + mu) / (sqrt2 sigma)), with the sigma = 0 step limit.
double component_erf(double x_db, double mu, double sigma) {
    const double z = x_db + mu;
    if (sigma == 0.0) return z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
    return std::erf(z / (std::numbers::sqrt2 * sigma));
}

// erfc((x_db + mu) / (sqrt2 sigma)), same limit handling.
double component_erfc(double x_db, double mu, double sigma) {
    const double z = x_db + mu;
    if (sigma == 0.0) return z > 0.0 ? 0.0 : (z < 0.0 ? 2.0 : 1.0);
    return std::erfc(z / (std::numbers::sqrt2 * sigma));
}

}  // namespace

double excess_gain_cdf(double x, double p_los, const SatChannelModel& sat) {
    if (!(x > 0.0)) throw std::domain_error("excess_gain_cdf: x must be positive");
    if (std::isinf(x)) return 1.0;
    const double x_db = 10.0 * std::log10(x);
    const double f = 0.5 + 0.5 * p_los * component_erf(x_db, sat.mu_los, sat.sigma_los) +
                     0.5 * (1.0 - p_los) * component_erf(x_db, sat.mu_nlos, sat.sigma_nlos);
    return std::clamp(f, 0.0, 1.0);
}

double excess_gain_cdf(double x, double phi, const EarthGeometry& geo, const SatChannelModel& sat) {
    return excess_gain_cdf(x, los_probability(phi, geo, sat), sat);
}

double excess_gain_survival(double x, double p_los, const SatChannelModel& sat) {
    if (x < 0.0 || std::isnan(x)) throw std::domain_error("excess_gain_survival: x must be non-negative");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    const double x_db = 10.0 * std::log10(x);
    const double s = 0.5 * p_los * component_erfc(x_db, sat.mu_los, sat.sigma_los) +
                     0.5 * (1.0 - p_los) * component_erfc(x_db, sat.mu_nlos, sat.sigma_nlos);
    return std::clamp(s, 0.0, 1.0);
}

double terrestrial_gain(double r, const TerrChannelModel& terr) {
    if (!(r > 0.0)) throw std::domain_error("terrestrial_gain: r must be positive");
    return terr.model_constant * terr.path_gain_constant * std::pow(r, -terr.path_loss_exponent);
}

}  // namespace channel
}  // namespace hybridcov
