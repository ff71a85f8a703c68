#include "hybridcov/linkstats.hpp"

#include <cmath>
#include <numbers>

namespace hybridcov::linkstats {

using std::numbers::pi;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(pi * x) / (pi * x);
}

double mean_sat_interference(const Scenario& scn, const quad::Tolerance& tol) {
    const double active = scn.access.duty_cycle * scn.dens.device_density * scn.access.kappa_sat;
    if (active == 0.0) return 0.0;
    const double phi_m = geo::max_earth_zenith(scn.cfg, scn.geo);
    const double re = scn.geo.earth_radius;
    // Strip area (m^2) weighted by the mean link gain; O(1e-2) near nadir.
    auto strip = [&](double phi) {
        return 2.0 * pi * re * re * std::sin(phi) * channel::freespace_gain(phi, scn.geo, scn.sat) *
               channel::excess_gain_mean(phi, scn.geo, scn.sat);
    };
    return active * scn.radio.eirp * quad::integrate(strip, 0.0, phi_m, tol);
}

double terr_interference_laplace(double s, const Scenario& scn) {
    const double a = scn.terr.path_loss_exponent;
    const double active = scn.access.duty_cycle * scn.dens.device_density;
    if (s == 0.0 || active == 0.0) return 1.0;
    const double k = scn.access.kappa_bs * scn.radio.eirp * scn.terr.model_constant *
                     scn.terr.path_gain_constant * s;
    return std::exp(-pi * active * std::pow(k, 2.0 / a) / sinc(2.0 / a));
}

}  // namespace hybridcov::linkstats
