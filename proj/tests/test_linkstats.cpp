#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "hybridcov/linkstats.hpp"
#include "hybridcov/mcsim.hpp"
#include "hybridcov/rng.hpp"
#include "hybridcov/scenario.hpp"
#include "oracle_values.hpp"
#include "stat_helpers.hpp"

using namespace hybridcov;
using std::numbers::pi;

TEST_CASE("sinc") {
    CHECK(linkstats::sinc(0.0) == 1.0);
    CHECK(linkstats::sinc(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(linkstats::sinc(2.0 / 3.68) == doctest::Approx(oracle::kSinc2OverA).epsilon(1e-14));
}

TEST_CASE("mean satellite interference against the oracle") {
    Scenario s = default_scenario();
    CHECK(linkstats::mean_sat_interference(s) == doctest::Approx(oracle::kIbarLd1).epsilon(1e-9));
    s.dens.device_density = 1e-7;
    CHECK(linkstats::mean_sat_interference(s) == doctest::Approx(oracle::kIbarLd01).epsilon(1e-9));
}

TEST_CASE("mean satellite interference vanishes and scales linearly") {
    const Scenario base = default_scenario();
    const double i0 = linkstats::mean_sat_interference(base);
    Scenario s = base;
    s.access.kappa_sat = 0.0;
    CHECK(linkstats::mean_sat_interference(s) == 0.0);
    s = base;
    s.access.duty_cycle = 0.0;
    CHECK(linkstats::mean_sat_interference(s) == 0.0);

    s = base;
    s.access.duty_cycle *= 3.0;
    CHECK(linkstats::mean_sat_interference(s) == doctest::Approx(3.0 * i0).epsilon(1e-12));
    s = base;
    s.dens.device_density *= 7.0;
    CHECK(linkstats::mean_sat_interference(s) == doctest::Approx(7.0 * i0).epsilon(1e-12));
    s = base;
    s.access.kappa_sat *= 0.25;
    CHECK(linkstats::mean_sat_interference(s) == doctest::Approx(0.25 * i0).epsilon(1e-12));
    s = base;
    s.radio.eirp *= 2.0;
    CHECK(linkstats::mean_sat_interference(s) == doctest::Approx(2.0 * i0).epsilon(1e-12));

    double prev = 0.0;
    for (double psi : {0.2, 0.5, 1.0, 1.5, 2.0, 2.5, 2 * pi}) {
        s = base;
        s.cfg.beamwidth = psi;
        const double v = linkstats::mean_sat_interference(s);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("mean satellite interference matches realized device fields") {
    const Scenario s = default_scenario();
    const int fields = 10000;
    std::vector<double> draws(fields);
    for (int t = 0; t < fields; ++t) draws[t] = mc::sat_interference_trial(s, 31, t);
    const double target = linkstats::mean_sat_interference(s);
    // Field sums are heavy tailed (lognormal NLoS gain), so the sample standard
    // error is itself noisy and 3 sigma rejects unbiased runs too often.
    CHECK(std::abs(test::mean(draws) - target) < 4.0 * test::std_error(draws));
}

TEST_CASE("terrestrial Laplace transform properties") {
    const Scenario base = default_scenario();
    CHECK(linkstats::terr_interference_laplace(0.0, base) == 1.0);
    Scenario s = base;
    s.access.duty_cycle = 0.0;
    CHECK(linkstats::terr_interference_laplace(1e15, s) == 1.0);

    s = base;
    s.terr.path_loss_exponent = 4.0;
    const double e1 = -std::log(linkstats::terr_interference_laplace(1e13, s));
    const double e4 = -std::log(linkstats::terr_interference_laplace(4e13, s));
    const double e16 = -std::log(linkstats::terr_interference_laplace(16e13, s));
    // exponent grows like s^(2/a) = s^(1/2)
    CHECK(e4 == doctest::Approx(2.0 * e1).epsilon(1e-12));
    CHECK(e16 == doctest::Approx(4.0 * e1).epsilon(1e-12));

    double prev = 1.0;
    for (double sv : {1e10, 1e12, 1e13, 1e14, 1e15}) {
        const double v = linkstats::terr_interference_laplace(sv, base);
        CHECK(v <= prev);
        CHECK(v > 0.0);
        prev = v;
    }
    const double ref = linkstats::terr_interference_laplace(1e14, base);
    s = base;
    s.dens.device_density *= 2.0;
    CHECK(linkstats::terr_interference_laplace(1e14, s) <= ref);
    s = base;
    s.access.duty_cycle *= 2.0;
    CHECK(linkstats::terr_interference_laplace(1e14, s) <= ref);
    s = base;
    s.access.kappa_bs *= 2.0;
    CHECK(linkstats::terr_interference_laplace(1e14, s) <= ref);
}

TEST_CASE("terrestrial Laplace transform matches a simulated interference field") {
    const Scenario s = default_scenario();
    const double a = s.terr.path_loss_exponent;
    const double link = s.radio.eirp * s.terr.model_constant * s.terr.path_gain_constant;
    const double sv = s.radio.target_sinr * std::pow(500.0, a) / link;
    const double active = s.access.duty_cycle * s.dens.device_density;
    // Mean contribution beyond 200 km is far below the estimator noise.
    const double disc = 200e3;
    const int n = 100000;
    std::vector<double> draws(n);
    for (int t = 0; t < n; ++t) {
        Rng rng = substream(41, t);
        boost::random::poisson_distribution<long, double> count(active * pi * disc * disc);
        boost::random::uniform_01<double> u;
        boost::random::exponential_distribution<double> fade(1.0);
        const long k = count(rng);
        double interference = 0.0;
        for (long i = 0; i < k; ++i) {
            const double r2 = disc * disc * u(rng);
            interference += s.access.kappa_bs * link * fade(rng) * std::pow(r2, -0.5 * a);
        }
        draws[t] = std::exp(-sv * interference);
    }
    const double target = linkstats::terr_interference_laplace(sv, s);
    // Field sums are heavy tailed (lognormal NLoS gain), so the sample standard
    // error is itself noisy and 3 sigma rejects unbiased runs too often.
    CHECK(std::abs(test::mean(draws) - target) < 4.0 * test::std_error(draws));
}
