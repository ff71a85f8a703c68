#pragma once

#include <cmath>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>


#include "hybridcov/rng.hpp"

namespace hybridcov {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

enum class ConstellationKind { uniform_random, walker_delta, walker_star };

std::string_view to_string(ConstellationKind k);
/// Accepts the to_string spellings plus "uniform", "ppp", "delta", "star".
ConstellationKind parse_constellation_kind(std::string_view name);

struct ConstellationSnapshot {
    std::vector<Vec3> positions;  // unit directions from the Earth's center
    double orbit_radius = 1.0;    // m
    ConstellationKind kind = ConstellationKind::uniform_random;
};

/// Walker layout parameters. Inclinations in radians; planes = 0 selects
/// default_planes(N).
struct WalkerConfig {
    double delta_inclination = 86.4 * std::numbers::pi / 180.0;
    double star_inclination = 53.0 * std::numbers::pi / 180.0;
    int planes = 0;
    int phasing = 0;

    double inclination(ConstellationKind kind) const {
        return kind == ConstellationKind::walker_star ? star_inclination : delta_inclination;
    }
};

namespace constellation {

/// Uniform direction via longitude ~ U(0, 2pi) and latitude ~ asin(U(-1, 1)).
template <class URNG>
Vec3 sample_uniform_direction(URNG& rng) {
    const double lon = 2.0 * std::numbers::pi * uniform01(rng);
    const double lat = std::asin(2.0 * uniform01(rng) - 1.0);
    const double c = std::cos(lat);
    return {c * std::cos(lon), c * std::sin(lon), std::sin(lat)};
}

template <class URNG>
void sample_uniform_sphere(std::span<Vec3> out, URNG& rng) {
    for (Vec3& p : out) p = sample_uniform_direction(rng);
}

template <class URNG>
std::vector<Vec3> sample_uniform_sphere(std::size_t n, URNG& rng) {
    std::vector<Vec3> out(n);
    sample_uniform_sphere(std::span<Vec3>(out), rng);
    return out;
}

template <class URNG>
ConstellationSnapshot uniform_snapshot(std::size_t n, double orbit_radius, URNG& rng) {
    return {sample_uniform_sphere(n, rng), orbit_radius, ConstellationKind::uniform_random};
}

/// Walker-delta (ascending nodes over 2pi) or Walker-star (over pi) layout,
/// satellites evenly spaced in argument of latitude. `phasing` is the Walker F
/// parameter: adjacent planes are offset by 2 pi F / N. Throws ConfigError when
/// n_planes does not divide n_sats.
ConstellationSnapshot walker(ConstellationKind kind, int n_sats, double inclination, int n_planes,
                             int phasing = 0, double orbit_radius = 1.0);

/// round(sqrt(n)) moved to the nearest divisor of n; ties go to fewer planes.
int default_planes(int n_sats);

/// "x,y,z" header then one unit vector per row.
void write_csv(std::ostream& os, const ConstellationSnapshot& snap);

}  // namespace constellation
}  // namespace hybridcov
