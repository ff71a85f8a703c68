#include "hybridcov/mcsim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>

#include "hybridcov/channel.hpp"
#include "hybridcov/geomodel.hpp"

namespace hybridcov {

using std::numbers::pi;

MCEstimate make_estimate(std::int64_t successes, std::int64_t trials, std::uint64_t seed) {
    MCEstimate e;
    e.trials = trials;
    e.successes = successes;
    e.seed = seed;
    e.mean = trials > 0 ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    e.ci_halfwidth = trials > 0 ? 1.96 * std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials)) : 0.0;
    return e;
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYBRIDCOV_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
    }
    return 1;
}

namespace mc {
namespace {

// Stream lanes within one trial.
constexpr std::uint64_t kLaneGeometry = 0;
constexpr std::uint64_t kLaneSatInterference = 1;
constexpr std::uint64_t kLaneTerrServing = 2;
constexpr std::uint64_t kLaneTerrRing0 = 3;

using Counts = std::array<std::int64_t, 3>;

// Runs body(begin, end, counts) over contiguous trial blocks and sums the
// counts. Each trial owns its substreams, so the partition cannot change results.
template <class Body>
Counts parallel_count(std::int64_t trials, int workers, Body body) {
    workers = static_cast<int>(std::clamp<std::int64_t>(workers, 1, std::max<std::int64_t>(trials, 1)));
    std::vector<Counts> partial(static_cast<std::size_t>(workers), Counts{0, 0, 0});
    auto block = [&](int w) {
        const std::int64_t begin = trials * w / workers;
        const std::int64_t end = trials * (w + 1) / workers;
        body(begin, end, partial[static_cast<std::size_t>(w)]);
    };
    if (workers == 1) {
        block(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(block, w);
        for (auto& t : pool) t.join();
    }
    Counts total{0, 0, 0};
    for (const Counts& c : partial)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += c[i];
    return total;
}

void check_trials(std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("Monte Carlo needs at least one trial");
}

struct SatInterferenceContext {
    const Scenario& scn;
    double one_minus_cos_m;
    double mean_count;
    double scale;       // kappa_s P
    double gain_const;  // l_o l_air
    double h2;
    double two_r_ro;
    double alpha;

    explicit SatInterferenceContext(const Scenario& s)
        : scn(s),
          one_minus_cos_m(0.0),
          mean_count(0.0),
          scale(s.access.kappa_sat * s.radio.eirp),
          gain_const(s.sat.path_gain_constant() * s.sat.air_absorption_gain),
          h2(s.geo.orbit_height * s.geo.orbit_height),
          two_r_ro(2.0 * s.geo.earth_radius * s.geo.orbit_radius()),
          alpha(s.geo.alpha()) {
        const double phi_m = geo::max_earth_zenith(s.cfg, s.geo);
        const double half = std::sin(0.5 * phi_m);
        one_minus_cos_m = 2.0 * half * half;
        mean_count = s.access.duty_cycle * s.dens.device_density * geo::cap_area(phi_m, s.geo);
    }

    double trial(std::uint64_t seed, std::int64_t t) const {
        if (scale == 0.0 || mean_count == 0.0) return 0.0;
        Rng rng = substream(seed, static_cast<std::uint64_t>(t), kLaneSatInterference);
        boost::random::poisson_distribution<std::int64_t, double> count_dist(mean_count);
        const std::int64_t k = count_dist(rng);
        const double beta = scn.sat.los_beta;
        double sum = 0.0;
        for (std::int64_t i = 0; i < k; ++i) {
            // Uniform on the cap: 1 - cos(phi) uniform on [0, 1 - cos(phi_m)].
            const double w = one_minus_cos_m * uniform01(rng);
            const double c = 1.0 - w;
            const double d2 = h2 + two_r_ro * w;
            const double denom = c - alpha;
            const double los_exp = denom > 0.0 ? beta * std::sqrt(w * (2.0 - w)) / denom
                                               : std::numeric_limits<double>::infinity();
            sum += gain_const / d2 * channel::sample_excess_gain_from_exponent(los_exp, scn.sat, rng);
        }
        return scale * sum;
    }
};

struct SatLinkContext {
    const Scenario& scn;
    ConstellationKind kind;
    ConstellationSnapshot layout;  // Walker kinds only
    std::size_t n_sats;
    double phi_m;

    SatLinkContext(const Scenario& s, ConstellationKind k)
        : scn(s), kind(k), n_sats(static_cast<std::size_t>(s.cfg.num_satellites)),
          phi_m(geo::max_earth_zenith(s.cfg, s.geo)) {
        if (kind != ConstellationKind::uniform_random) {
            const int n = s.cfg.num_satellites;
            const int planes = s.walker.planes > 0 ? s.walker.planes : constellation::default_planes(n);
            layout = constellation::walker(kind, n, s.walker.inclination(kind), planes, s.walker.phasing,
                                           s.geo.orbit_radius());
        }
    }

    // Angle to the nearest satellite. Uniform case: the typical user sits at the
    // north pole of a fresh random constellation. Walker case: the layout is
    // fixed and the user is placed uniformly on the sphere, which is the same as
    // a random rotation about the polar axis plus a sphere-uniform latitude.
    double nearest_angle(Rng& rng) const {
        double best = -1.0;
        if (kind == ConstellationKind::uniform_random) {
            // Only the polar coordinate matters for a user at the pole, and
            // z = sin(asin(2U - 1)) = 2U - 1 under the same transform.
            for (std::size_t i = 0; i < n_sats; ++i) best = std::max(best, 2.0 * uniform01(rng) - 1.0);
        } else {
            const Vec3 user = constellation::sample_uniform_direction(rng);
            for (const Vec3& p : layout.positions) best = std::max(best, user.dot(p));
        }
        return std::acos(std::clamp(best, -1.0, 1.0));
    }

    template <class InterferenceFn>
    bool success(std::uint64_t seed, std::int64_t t, InterferenceFn&& interference) const {
        Rng rng = substream(seed, static_cast<std::uint64_t>(t), kLaneGeometry);
        const double phi = nearest_angle(rng);
        if (phi > phi_m) return false;
        const double zeta = channel::sample_excess_gain(phi, scn.geo, scn.sat, rng);
        const double signal = scn.radio.eirp * channel::freespace_gain(phi, scn.geo, scn.sat) * zeta;
        return signal >= scn.radio.target_sinr * (interference(t) + scn.radio.sat_noise);
    }
};

struct TerrContext {
    const Scenario& scn;
    double a;
    double lb;
    double active;       // D lambda_d
    double link;         // P b l_o
    double gamma;
    double noise;
    double noise_radius; // mean interference beyond it < 1e-3 W_b
    double eps;
    int doublings;

    TerrContext(const Scenario& s, const MCOptions& opts)
        : scn(s),
          a(s.terr.path_loss_exponent),
          lb(s.dens.bs_density),
          active(s.access.duty_cycle * s.dens.device_density),
          link(s.radio.eirp * s.terr.model_constant * s.terr.path_gain_constant),
          gamma(s.radio.target_sinr),
          noise(s.radio.bs_noise),
          noise_radius(0.0),
          eps(opts.terr_truncation_eps),
          doublings(std::max(0, opts.terr_truncation_doublings)) {
        const double k = active * s.access.kappa_bs;
        if (k > 0.0 && noise > 0.0)
            noise_radius = std::pow(2.0 * pi * k * link / ((a - 2.0) * 1e-3 * noise), 1.0 / (a - 2.0));
    }

    double truncation_radius(double r, double noise_factor) const {
        const double k = active * scn.access.kappa_bs;
        if (k == 0.0) return 0.0;
        const double bias_radius =
            std::pow(noise_factor * gamma * k * 2.0 * pi * std::pow(r, a) / ((a - 2.0) * eps), 1.0 / (a - 2.0));
        return std::max(noise_radius, bias_radius);
    }

    bool success(std::uint64_t seed, std::int64_t t) const {
        Rng rng = substream(seed, static_cast<std::uint64_t>(t), kLaneTerrServing);
        boost::random::exponential_distribution<double> unit_exp(1.0);
        const double r = std::sqrt(-std::log1p(-uniform01(rng)) / (pi * lb));
        const double fade = unit_exp(rng);
        const double s = gamma * std::pow(r, a) / link;
        const double noise_term = s * noise;
        if (fade < noise_term) return false;
        const double k = active * scn.access.kappa_bs;
        if (k == 0.0 || s == 0.0) return true;

        const double r_max = truncation_radius(r, std::exp(-noise_term));
        const double budget = fade / s - noise;  // interference the link can still absorb
        const double per_unit = scn.access.kappa_bs * link;
        double interference = 0.0;
        double inner = 0.0;
        double outer = r_max;
        for (int ring = 0; ring <= doublings; ++ring) {
            if (ring > 0) {
                inner = outer;
                outer *= 2.0;
            }
            const double area = pi * (outer * outer - inner * inner);
            if (!(area > 0.0)) continue;
            Rng ring_rng = substream(seed, static_cast<std::uint64_t>(t), kLaneTerrRing0 + static_cast<std::uint64_t>(ring));
            boost::random::poisson_distribution<std::int64_t, double> count_dist(active * area);
            const std::int64_t n = count_dist(ring_rng);
            const double in2 = inner * inner;
            const double span2 = outer * outer - in2;
            for (std::int64_t i = 0; i < n; ++i) {
                const double ri2 = in2 + span2 * uniform01(ring_rng);
                interference += per_unit * unit_exp(ring_rng) * std::pow(ri2, -0.5 * a);
            }
            if (interference > budget) return false;
        }
        return interference <= budget;
    }
};

}  // namespace

double sat_interference_trial(const Scenario& scn, std::uint64_t seed, std::int64_t trial) {
    return SatInterferenceContext(scn).trial(seed, trial);
}

std::vector<double> sample_sat_interference(const Scenario& scn, std::int64_t trials, std::uint64_t seed,
                                            const MCOptions& opts) {
    check_trials(trials);
    const SatInterferenceContext ctx(scn);
    std::vector<double> out(static_cast<std::size_t>(trials));
    parallel_count(trials, resolve_workers(opts.workers), [&](std::int64_t b, std::int64_t e, Counts&) {
        for (std::int64_t t = b; t < e; ++t) out[static_cast<std::size_t>(t)] = ctx.trial(seed, t);
    });
    return out;
}

std::vector<double> sample_contact_angles(const Scenario& scn, ConstellationKind kind, std::int64_t trials,
                                          std::uint64_t seed, const MCOptions& opts) {
    check_trials(trials);
    const SatLinkContext ctx(scn, kind);
    std::vector<double> out(static_cast<std::size_t>(trials));
    parallel_count(trials, resolve_workers(opts.workers), [&](std::int64_t b, std::int64_t e, Counts&) {
        for (std::int64_t t = b; t < e; ++t) {
            Rng rng = substream(seed, static_cast<std::uint64_t>(t), kLaneGeometry);
            out[static_cast<std::size_t>(t)] = ctx.nearest_angle(rng);
        }
    });
    return out;
}

namespace {

void check_bank(std::span<const double> interference, std::int64_t trials) {
    if (!interference.empty() && static_cast<std::int64_t>(interference.size()) != trials)
        throw std::invalid_argument("interference bank size does not match trial count");
}

}  // namespace

MCEstimate simulate_sat_link(const Scenario& scn, ConstellationKind kind, std::int64_t trials,
                             std::uint64_t seed, const MCOptions& opts, std::span<const double> interference) {
    check_trials(trials);
    check_bank(interference, trials);
    const SatLinkContext link(scn, kind);
    const SatInterferenceContext field(scn);
    const Counts c = parallel_count(trials, resolve_workers(opts.workers), [&](std::int64_t b, std::int64_t e, Counts& out) {
        auto interf = [&](std::int64_t t) {
            return interference.empty() ? field.trial(seed, t) : interference[static_cast<std::size_t>(t)];
        };
        for (std::int64_t t = b; t < e; ++t)
            if (link.success(seed, t, interf)) ++out[0];
    });
    return make_estimate(c[0], trials, seed);
}

MCEstimate simulate_terr_link(const Scenario& scn, std::int64_t trials, std::uint64_t seed, const MCOptions& opts) {
    check_trials(trials);
    const TerrContext ctx(scn, opts);
    const Counts c = parallel_count(trials, resolve_workers(opts.workers), [&](std::int64_t b, std::int64_t e, Counts& out) {
        for (std::int64_t t = b; t < e; ++t)
            if (ctx.success(seed, t)) ++out[1];
    });
    return make_estimate(c[1], trials, seed);
}

HybridEstimate simulate_hybrid(const Scenario& scn, ConstellationKind kind, std::int64_t trials,
                               std::uint64_t seed, const MCOptions& opts, std::span<const double> interference) {
    check_trials(trials);
    check_bank(interference, trials);
    const SatLinkContext link(scn, kind);
    const SatInterferenceContext field(scn);
    const TerrContext terr(scn, opts);
    const Counts c = parallel_count(trials, resolve_workers(opts.workers), [&](std::int64_t b, std::int64_t e, Counts& out) {
        auto interf = [&](std::int64_t t) {
            return interference.empty() ? field.trial(seed, t) : interference[static_cast<std::size_t>(t)];
        };
        for (std::int64_t t = b; t < e; ++t) {
            const bool s_ok = link.success(seed, t, interf);
            const bool b_ok = terr.success(seed, t);
            out[0] += s_ok;
            out[1] += b_ok;
            out[2] += (s_ok || b_ok);
        }
    });
    return {make_estimate(c[0], trials, seed), make_estimate(c[1], trials, seed), make_estimate(c[2], trials, seed)};
}

double terr_truncation_radius(const Scenario& scn, double serving_distance, double eps) {
    MCOptions opts;
    opts.terr_truncation_eps = eps;
    const TerrContext ctx(scn, opts);
    const double s = scn.radio.target_sinr * std::pow(serving_distance, ctx.a) / ctx.link;
    return ctx.truncation_radius(serving_distance, std::exp(-s * scn.radio.bs_noise));
}

}  // namespace mc
}  // namespace hybridcov
