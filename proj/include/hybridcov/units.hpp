#pragma once

#include <cmath>
#include <numbers>

namespace hybridcov::units {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s
inline constexpr double pi = std::numbers::pi;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline constexpr double km_to_m(double km) { return km * 1e3; }
inline constexpr double per_km2_to_per_m2(double d) { return d * 1e-6; }
inline constexpr double per_m2_to_per_km2(double d) { return d * 1e6; }
inline constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

}  // namespace hybridcov::units
