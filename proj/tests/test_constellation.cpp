#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "hybridcov/constellation.hpp"
#include "hybridcov/errors.hpp"
#include "hybridcov/geomodel.hpp"
#include "hybridcov/mcsim.hpp"
#include "hybridcov/scenario.hpp"
#include "stat_helpers.hpp"

using namespace hybridcov;
using std::numbers::pi;

TEST_CASE("uniform sphere sampler") {
    Rng rng = substream(3, 0);
    CHECK(constellation::sample_uniform_sphere(0, rng).empty());

    const std::size_t n = 1000000;
    const auto pts = constellation::sample_uniform_sphere(n, rng);
    REQUIRE(pts.size() == n);
    double zsum = 0.0, worst_norm = 0.0;
    std::vector<double> bands(10, 0.0);
    for (const Vec3& p : pts) {
        zsum += p.z;
        worst_norm = std::max(worst_norm, std::abs(p.norm() - 1.0));
        // equal-area latitude bands are equal-width bands in z
        bands[std::min<std::size_t>(9, static_cast<std::size_t>((p.z + 1.0) * 5.0))] += 1.0;
    }
    CHECK(std::abs(zsum / n) < 0.003);
    CHECK(worst_norm < 1e-12);
    double chi2 = 0.0;
    const double expected = n / 10.0;
    for (double c : bands) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < test::chi2_critical(9, 0.01));
}

TEST_CASE("uniform snapshot reproduces the contact-angle law (KS)") {
    // The binomial layout with exactly N points approaches the Poisson law;
    // at N = 1000 the two CDFs differ by far less than the KS threshold.
    Scenario s = default_scenario();
    s.cfg.num_satellites = 1000;
    const std::int64_t n = 100000;
    const auto angles = mc::sample_contact_angles(s, ConstellationKind::uniform_random, n, 17);
    const double stat = test::ks_statistic(angles, [](double phi) { return geo::contact_angle_cdf(phi, 1000.0); });
    CHECK(stat < test::ks_critical_01(n));

    Rng rng = substream(21, 0);
    const auto snap = constellation::uniform_snapshot(1000, s.geo.orbit_radius(), rng);
    CHECK(snap.positions.size() == 1000);
    CHECK(snap.orbit_radius == s.geo.orbit_radius());
    CHECK(snap.kind == ConstellationKind::uniform_random);
}

TEST_CASE("walker counting and geometry") {
    for (auto kind : {ConstellationKind::walker_delta, ConstellationKind::walker_star}) {
        const double inc = kind == ConstellationKind::walker_delta ? 86.4 * pi / 180 : 53.0 * pi / 180;
        const auto snap = constellation::walker(kind, 16, inc, 4);
        REQUIRE(snap.positions.size() == 16);
        CHECK(snap.kind == kind);
        for (const Vec3& p : snap.positions) {
            CHECK(std::abs(p.norm() - 1.0) < 1e-12);
            CHECK(std::abs(p.z) <= std::sin(inc) + 1e-12);
        }
        // ascending nodes: first satellite of each plane sits on the equator
        const double spacing = kind == ConstellationKind::walker_delta ? 2 * pi / 4 : pi / 4;
        for (int k = 0; k < 4; ++k) {
            const Vec3& node = snap.positions[k * 4];
            CHECK(std::abs(node.z) < 1e-12);
            double raan = std::atan2(node.y, node.x);
            if (raan < -1e-12) raan += 2 * pi;
            CHECK(raan == doctest::Approx(k * spacing).epsilon(1e-12));
        }
        // even spacing in argument of latitude within a plane
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) {
                const Vec3& a = snap.positions[k * 4 + j];
                const Vec3& b = snap.positions[k * 4 + (j + 1) % 4];
                CHECK(std::acos(std::clamp(a.dot(b), -1.0, 1.0)) == doctest::Approx(pi / 2).epsilon(1e-12));
            }
    }
}

TEST_CASE("walker nearest-neighbor statistics") {
    // Adjacent planes of a star layout share nodes pi/P apart; in a delta layout 2pi/P.
    const int planes = 10, n = 100;
    auto min_node_gap = [&](ConstellationKind kind) {
        const auto snap = constellation::walker(kind, n, 60.0 * pi / 180, planes);
        double g = 2 * pi;
        for (int k = 1; k < planes; ++k) {
            const Vec3& a = snap.positions[(k - 1) * (n / planes)];
            const Vec3& b = snap.positions[k * (n / planes)];
            g = std::min(g, std::acos(std::clamp(a.dot(b), -1.0, 1.0)));
        }
        return g;
    };
    CHECK(min_node_gap(ConstellationKind::walker_star) == doctest::Approx(pi / planes).epsilon(1e-12));
    CHECK(min_node_gap(ConstellationKind::walker_delta) == doctest::Approx(2 * pi / planes).epsilon(1e-12));
}

TEST_CASE("walker phasing and determinism") {
    const auto a = constellation::walker(ConstellationKind::walker_delta, 30, 1.0, 5);
    const auto b = constellation::walker(ConstellationKind::walker_delta, 30, 1.0, 5);
    REQUIRE(a.positions.size() == b.positions.size());
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        CHECK(a.positions[i].x == b.positions[i].x);
        CHECK(a.positions[i].y == b.positions[i].y);
        CHECK(a.positions[i].z == b.positions[i].z);
    }
    const auto phased = constellation::walker(ConstellationKind::walker_delta, 30, 1.0, 5, 1);
    // plane 1 is advanced by 2 pi F / N in argument of latitude
    const Vec3& p0 = a.positions[6];
    const Vec3& p1 = phased.positions[6];
    CHECK(std::acos(std::clamp(p0.dot(p1), -1.0, 1.0)) == doctest::Approx(2 * pi / 30).epsilon(1e-10));
    CHECK(phased.positions[0].x == a.positions[0].x);
}

TEST_CASE("walker errors") {
    CHECK_THROWS_AS(constellation::walker(ConstellationKind::walker_delta, 16, 1.0, 3), ConfigError);
    CHECK_THROWS_AS(constellation::walker(ConstellationKind::walker_star, 16, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(constellation::walker(ConstellationKind::uniform_random, 16, 1.0, 4), ConfigError);
}

TEST_CASE("default planes") {
    CHECK(constellation::default_planes(16) == 4);
    CHECK(constellation::default_planes(100) == 10);
    CHECK(constellation::default_planes(30) == 5);
    CHECK(constellation::default_planes(1) == 1);
    CHECK(constellation::default_planes(7) == 1);  // prime: of the divisors 1 and 7, 1 is nearer round(sqrt 7) = 3
    CHECK(constellation::default_planes(400) == 20);
    for (int n = 1; n <= 500; ++n) {
        const int p = constellation::default_planes(n);
        CHECK(n % p == 0);
        const long target = std::lround(std::sqrt(static_cast<double>(n)));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) CHECK(std::abs(d - target) >= std::abs(p - target));
    }
}

TEST_CASE("kind names and snapshot export") {
    CHECK(parse_constellation_kind("walker_star") == ConstellationKind::walker_star);
    CHECK(parse_constellation_kind("delta") == ConstellationKind::walker_delta);
    CHECK(parse_constellation_kind("ppp") == ConstellationKind::uniform_random);
    CHECK_THROWS_AS(parse_constellation_kind("rosette"), ConfigError);
    CHECK(to_string(ConstellationKind::walker_delta) == "walker_delta");

    std::ostringstream os;
    constellation::write_csv(os, constellation::walker(ConstellationKind::walker_star, 4, pi / 2, 2));
    const std::string text = os.str();
    CHECK(text.rfind("x,y,z\n1,0,0\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
