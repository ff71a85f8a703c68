#include "hybridcov/constellation.hpp"

#include <ostream>
#include <string>

#include "hybridcov/errors.hpp"
#include "hybridcov/format.hpp"

namespace hybridcov {

using std::numbers::pi;

std::string_view to_string(ConstellationKind k) {
    switch (k) {
        case ConstellationKind::uniform_random: return "uniform_random";
        case ConstellationKind::walker_delta: return "walker_delta";
        case ConstellationKind::walker_star: return "walker_star";
    }
    return "unknown";
}

ConstellationKind parse_constellation_kind(std::string_view name) {
    if (name == "uniform_random" || name == "uniform" || name == "ppp") return ConstellationKind::uniform_random;
    if (name == "walker_delta" || name == "delta") return ConstellationKind::walker_delta;
    if (name == "walker_star" || name == "star") return ConstellationKind::walker_star;
    throw ConfigError("constellation", "unknown constellation kind '" + std::string(name) + "'");
}

namespace constellation {

ConstellationSnapshot walker(ConstellationKind kind, int n_sats, double inclination, int n_planes,
                             int phasing, double orbit_radius) {
    if (kind == ConstellationKind::uniform_random)
        throw ConfigError("constellation", "walker() needs a Walker kind");
    if (n_sats < 1) throw ConfigError("num_satellites", "must be at least 1");
    if (n_planes < 1 || n_sats % n_planes != 0)
        throw ConfigError("walker_planes", std::to_string(n_planes) + " planes do not divide " +
                                               std::to_string(n_sats) + " satellites");
    const int per_plane = n_sats / n_planes;
    const double node_span = kind == ConstellationKind::walker_delta ? 2.0 * pi : pi;
    const double ci = std::cos(inclination);
    const double si = std::sin(inclination);

    ConstellationSnapshot snap;
    snap.kind = kind;
    snap.orbit_radius = orbit_radius;
    snap.positions.reserve(static_cast<std::size_t>(n_sats));
    for (int k = 0; k < n_planes; ++k) {
        const double raan = node_span * k / n_planes;
        const double co = std::cos(raan);
        const double so = std::sin(raan);
        for (int j = 0; j < per_plane; ++j) {
            const double u = 2.0 * pi * j / per_plane + 2.0 * pi * phasing * k / n_sats;
            const double cu = std::cos(u);
            const double su = std::sin(u);
            snap.positions.push_back({co * cu - so * su * ci, so * cu + co * su * ci, su * si});
        }
    }
    return snap;
}

int default_planes(int n_sats) {
    if (n_sats < 1) throw ConfigError("num_satellites", "must be at least 1");
    const int target = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_sats))));
    int best = 1;
    for (int d = 1; d <= n_sats; ++d) {
        if (n_sats % d != 0) continue;
        if (std::abs(d - target) < std::abs(best - target)) best = d;
    }
    return best;
}

void write_csv(std::ostream& os, const ConstellationSnapshot& snap) {
    os << "x,y,z\n";
    for (const Vec3& p : snap.positions)
        os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << '\n';
}

}  // namespace constellation
}  // namespace hybridcov
