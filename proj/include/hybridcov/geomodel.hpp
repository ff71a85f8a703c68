#pragma once

#include <numbers>

namespace hybridcov {

/// Spherical Earth with a concentric constellation shell. Lengths in meters.
struct EarthGeometry {
    double earth_radius = 6'371'000.0;
    double orbit_height = 500'000.0;

    double orbit_radius() const { return earth_radius + orbit_height; }
    /// R / (R + h), always in (0, 1) for a valid geometry.
    double alpha() const { return earth_radius / orbit_radius(); }

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

struct ConstellationConfig {
    int num_satellites = 500;
    double beamwidth = 2.0 * std::numbers::pi;  // radians, (0, 2pi]

    void validate() const;
};

/// Areal densities on the Earth's surface, per square meter.
struct GroundDensities {
    double bs_density = 1e-8;      // 0.01 per km^2
    double device_density = 1e-6;  // 1 per km^2

    void validate() const;
};

namespace geo {

/// Mean satellite density on the constellation sphere, per m^2.
double satellite_density(const ConstellationConfig& cfg, const EarthGeometry& geo);
double satellite_density(double num_satellites, const EarthGeometry& geo);

/// Zenith angle seen from the user for a satellite at Earth-centered angle `phi`.
/// Defined on [0, pi); returns 0 at phi = 0 and pi/2 at phi = acos(alpha).
double user_zenith_from_earth_angle(double phi, const EarthGeometry& geo);

/// Elevation above the local horizon, pi/2 - user zenith.
double elevation_from_earth_angle(double phi, const EarthGeometry& geo);

/// Density of the Earth-centered angle to the nearest satellite. Defective:
/// integrates to 1 - exp(-N) over [0, pi].
double contact_angle_pdf(double phi, double num_satellites);
inline double contact_angle_pdf(double phi, const ConstellationConfig& cfg) {
    return contact_angle_pdf(phi, static_cast<double>(cfg.num_satellites));
}
/// P(contact angle <= phi) for the same law.
double contact_angle_cdf(double phi, double num_satellites);

/// Nearest-BS distance density for a planar PPP of intensity bs_density.
double contact_distance_pdf(double r, const GroundDensities& dens);
double contact_distance_cdf(double r, const GroundDensities& dens);

/// Half apex angle of the satellite footprint, limited by beamwidth or horizon.
double max_earth_zenith(const ConstellationConfig& cfg, const EarthGeometry& geo);
double max_earth_zenith(double beamwidth, const EarthGeometry& geo);

/// Straight-line distance between a ground point and a satellite separated by
/// Earth-centered angle `phi`.
double slant_range(double phi, const EarthGeometry& geo);

/// Area of the spherical cap of half apex angle `phi_m` on the Earth's surface.
double cap_area(double phi_m, const EarthGeometry& geo);

}  // namespace geo
}  // namespace hybridcov
