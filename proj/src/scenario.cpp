#include "hybridcov/scenario.hpp"

#include <cmath>
#include <numbers>

#include "hybridcov/errors.hpp"

namespace hybridcov {

void AccessModel::validate() const {
    if (!(kappa_sat >= 0.0 && kappa_sat <= 1.0)) throw ConfigError("kappa_sat", "must lie in [0, 1]");
    if (!(kappa_bs >= 0.0 && kappa_bs <= 1.0)) throw ConfigError("kappa_bs", "must lie in [0, 1]");
    if (!(duty_cycle >= 0.0 && duty_cycle <= 1.0)) throw ConfigError("duty_cycle", "must lie in [0, 1]");
}

void Scenario::sync() { terr.path_gain_constant = sat.path_gain_constant(); }

void Scenario::validate() const {
    geo.validate();
    cfg.validate();
    dens.validate();
    sat.validate();
    terr.validate();
    radio.validate();
    access.validate();
    if (!(walker.delta_inclination >= 0.0 && walker.delta_inclination <= std::numbers::pi))
        throw ConfigError("walker_delta_inclination", "must lie in [0, 180] deg");
    if (!(walker.star_inclination >= 0.0 && walker.star_inclination <= std::numbers::pi))
        throw ConfigError("walker_star_inclination", "must lie in [0, 180] deg");
    if (walker.planes < 0) throw ConfigError("walker_planes", "must be non-negative (0 = automatic)");
    if (walker.phasing < 0) throw ConfigError("walker_phasing", "must be non-negative");
    const double lo = sat.path_gain_constant();
    if (std::abs(terr.path_gain_constant - lo) > 1e-12 * lo)
        throw ConfigError("carrier_frequency", "terrestrial path-gain constant out of sync");
}

Scenario default_scenario() {
    Scenario s;
    s.sync();
    return s;
}

}  // namespace hybridcov
