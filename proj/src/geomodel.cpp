#include "hybridcov/geomodel.hpp"

#include <cmath>
#include <stdexcept>

#include "hybridcov/errors.hpp"

namespace hybridcov {

using std::numbers::pi;

void EarthGeometry::validate() const {
    if (!(earth_radius > 0.0) || !std::isfinite(earth_radius))
        throw ConfigError("earth_radius", "must be positive");
    if (!(orbit_height > 0.0) || !std::isfinite(orbit_height))
        throw ConfigError("orbit_height", "must be positive");
}

void ConstellationConfig::validate() const {
    if (num_satellites < 1) throw ConfigError("num_satellites", "must be at least 1");
    if (!(beamwidth > 0.0) || beamwidth > 2.0 * pi + 1e-12)
        throw ConfigError("beamwidth", "must lie in (0, 2pi]");
}

void GroundDensities::validate() const {
    if (!(bs_density > 0.0) || !std::isfinite(bs_density))
        throw ConfigError("bs_density", "must be positive");
    if (!(device_density >= 0.0) || !std::isfinite(device_density))
        throw ConfigError("device_density", "must be non-negative");
}

namespace geo {

double satellite_density(double num_satellites, const EarthGeometry& geo) {
    if (!(num_satellites > 0.0)) throw std::invalid_argument("satellite_density: N_s must be positive");
    if (!(geo.orbit_height > 0.0) || !(geo.earth_radius > 0.0))
        throw std::invalid_argument("satellite_density: invalid geometry");
    const double r = geo.orbit_radius();
    return num_satellites / (4.0 * pi * r * r);
}

double satellite_density(const ConstellationConfig& cfg, const EarthGeometry& geo) {
    return satellite_density(static_cast<double>(cfg.num_satellites), geo);
}

double user_zenith_from_earth_angle(double phi, const EarthGeometry& geo) {
    // acot(x / y) with the (0, pi) branch, written as atan2 so phi = 0 needs no special case.
    return std::atan2(std::sin(phi), std::cos(phi) - geo.alpha());
}

double elevation_from_earth_angle(double phi, const EarthGeometry& geo) {
    return pi / 2.0 - user_zenith_from_earth_angle(phi, geo);
}

double contact_angle_pdf(double phi, double num_satellites) {
    const double half_n = 0.5 * num_satellites;
    return half_n * std::sin(phi) * std::exp(-half_n * (1.0 - std::cos(phi)));
}

double contact_angle_cdf(double phi, double num_satellites) {
    return -std::expm1(-0.5 * num_satellites * (1.0 - std::cos(phi)));
}

double contact_distance_pdf(double r, const GroundDensities& dens) {
    const double lb = dens.bs_density;
    return 2.0 * pi * lb * r * std::exp(-pi * lb * r * r);
}

double contact_distance_cdf(double r, const GroundDensities& dens) {
    return -std::expm1(-pi * dens.bs_density * r * r);
}

double max_earth_zenith(double beamwidth, const EarthGeometry& geo) {
    const double alpha = geo.alpha();
    const double half = 0.5 * beamwidth;
    if (beamwidth < 2.0 * std::asin(alpha)) return std::asin(std::sin(half) / alpha) - half;
    return std::acos(alpha);
}

double max_earth_zenith(const ConstellationConfig& cfg, const EarthGeometry& geo) {
    return max_earth_zenith(cfg.beamwidth, geo);
}

double slant_range(double phi, const EarthGeometry& geo) {
    const double re = geo.earth_radius;
    const double ro = geo.orbit_radius();
    // h^2 + 2 R r_o (1 - cos phi) is the same quantity without cancellation near nadir.
    const double h = geo.orbit_height;
    const double s = std::sin(0.5 * phi);
    return std::sqrt(h * h + 4.0 * re * ro * s * s);
}

double cap_area(double phi_m, const EarthGeometry& geo) {
    const double re = geo.earth_radius;
    return 2.0 * pi * re * re * (1.0 - std::cos(phi_m));
}

}  // namespace geo
}  // namespace hybridcov
