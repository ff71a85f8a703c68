#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hybridcov/constellation.hpp"
#include "hybridcov/scenario.hpp"

namespace hybridcov {

struct MCEstimate {
    double mean = 0.0;
    double ci_halfwidth = 0.0;  // 95 % normal approximation
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    std::uint64_t seed = 0;
};

MCEstimate make_estimate(std::int64_t successes, std::int64_t trials, std::uint64_t seed);

struct HybridEstimate {
    MCEstimate sat;
    MCEstimate terr;
    MCEstimate hybrid;
};

struct MCOptions {
    /// Worker threads; 0 reads HYBRIDCOV_THREADS, falling back to 1.
    int workers = 0;
    /// Per-trial bound on the coverage bias from truncating the terrestrial
    /// interferer field (see simulate_terr_link).
    double terr_truncation_eps = 1e-4;
    /// Extra annuli beyond the truncation radius, each doubling it. Inner rings
    /// keep their own random streams, so results nest across settings.
    int terr_truncation_doublings = 0;
};

/// Resolves MCOptions::workers.
int resolve_workers(int requested);

namespace mc {

/// Per-trial aggregate interference (W) at the serving satellite: a Poisson
/// number of active devices uniform on the footprint cap, each with its own
/// angle and excess-gain draw, scaled by kappa_s. The draws depend only on
/// (seed, trial) and on the interference parameters, never on N_s or the
/// constellation kind, so one bank can be shared by runs that differ in those.
double sat_interference_trial(const Scenario& scn, std::uint64_t seed, std::int64_t trial);
std::vector<double> sample_sat_interference(const Scenario& scn, std::int64_t trials, std::uint64_t seed,
                                            const MCOptions& opts = {});

/// Earth-centered angle from the typical user to its nearest satellite, one
/// value per trial, using the same geometry streams as simulate_sat_link.
std::vector<double> sample_contact_angles(const Scenario& scn, ConstellationKind kind, std::int64_t trials,
                                          std::uint64_t seed, const MCOptions& opts = {});

/// Satellite-link success fraction. `interference`, when non-empty, must come
/// from sample_sat_interference with the same scenario, seed and trials; the
/// result is then identical to computing it inline.
MCEstimate simulate_sat_link(const Scenario& scn, ConstellationKind kind, std::int64_t trials,
                             std::uint64_t seed, const MCOptions& opts = {},
                             std::span<const double> interference = {});

/// Terrestrial-link success fraction. Per trial: nearest-BS distance from the
/// contact-distance law, unit-exponential fading, and active interferers as a
/// planar PPP of density D lambda_d around the BS out to r_max. r_max is the
/// larger of (a) the radius beyond which the mean interference is below
/// 1e-3 W_b and (b) the radius that bounds the trial's success-probability bias
/// by eps (1 - e^-x <= x): e^(-s W_b) s E[I_tail(r_max)] <= eps.
MCEstimate simulate_terr_link(const Scenario& scn, std::int64_t trials, std::uint64_t seed,
                              const MCOptions& opts = {});

/// Both links per trial with independent randomness; hybrid succeeds when
/// either does. The satellite and terrestrial parts use the same streams as the
/// single-link simulators, so they match them exactly for equal seeds.
HybridEstimate simulate_hybrid(const Scenario& scn, ConstellationKind kind, std::int64_t trials,
                               std::uint64_t seed, const MCOptions& opts = {},
                               std::span<const double> interference = {});

/// Truncation radius (b) above for a given serving distance; exposed for tests.
double terr_truncation_radius(const Scenario& scn, double serving_distance, double eps);

}  // namespace mc
}  // namespace hybridcov
