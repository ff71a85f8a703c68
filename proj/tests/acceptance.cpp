// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hybridcov/cli.hpp"
#include "hybridcov/coverage.hpp"
#include "hybridcov/designer.hpp"
#include "hybridcov/errors.hpp"
#include "hybridcov/geomodel.hpp"
#include "hybridcov/linkstats.hpp"
#include "hybridcov/mcsim.hpp"

using namespace hybridcov;

namespace {

constexpr std::int64_t kTrials = 100000;
constexpr std::uint64_t kSeed = 20240601;
constexpr double kPerKm2 = 1e-6;

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

void report(int id, const char* name, bool ok, const std::string& detail, const Timer& t) {
    if (!ok) ++failures;
    std::printf("[%s] %2d %-28s %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(), t.seconds());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// GK61 over geometric segments [0, s, 2s, 4s, ...] up to hi; independent of
// the library's substituted integrals.
template <class F>
double integrate_segments(F f, double scale, double hi) {
    double total = 0.0, lo = 0.0, b = scale;
    while (lo < hi) {
        b = std::min(b, hi);
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, b, 8, 1e-12);
        lo = b;
        b *= 2.0;
    }
    return total;
}

Scenario defaults_with(double lambda_d_km2, double lambda_b_km2 = 0.01, int n_sats = 500) {
    Scenario s = default_scenario();
    s.dens.device_density = lambda_d_km2 * kPerKm2;
    s.dens.bs_density = lambda_b_km2 * kPerKm2;
    s.cfg.num_satellites = n_sats;
    return s;
}

void criterion1() {
    Timer t;
    double worst = 0.0;
    for (double n : {1.0, 10.0, 100.0, 1000.0}) {
        const double v =
            integrate_segments([n](double phi) { return geo::contact_angle_pdf(phi, n); }, 0.05 / std::sqrt(n),
                               std::numbers::pi);
        worst = std::max(worst, std::abs(v - (1.0 - std::exp(-n))));
    }
    double worst_r = 0.0;
    for (double lb : {1e-9, 1e-8, 1e-7}) {
        GroundDensities d;
        d.bs_density = lb;
        const double scale = 0.05 / std::sqrt(lb);
        const double v = integrate_segments([&](double r) { return geo::contact_distance_pdf(r, d); }, scale,
                                            200.0 / std::sqrt(lb));
        worst_r = std::max(worst_r, std::abs(v - 1.0));
    }
    const bool ok = worst <= 1e-9 && worst_r <= 1e-9 && t.seconds() < 1.0;
    report(1, "normalization", ok,
           fmt("max |int contact-angle pdf - (1-e^-N)| = %.2e, max |int contact-distance pdf - 1| = %.2e", worst,
               worst_r),
           t);
}

void criterion2() {
    Timer t;
    double worst = 0.0;
    for (double lb : {0.001, 0.01, 0.1})
        for (double ld : {0.1, 1.0, 10.0}) {
            Scenario s = defaults_with(ld, lb);
            s.radio.bs_noise = 0.0;
            const double a = s.terr.path_loss_exponent;
            const double d = s.access.duty_cycle * s.dens.device_density;
            const double x = 2.0 / a;
            const double sinc = std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
            const double closed = s.dens.bs_density /
                                  (s.dens.bs_density + d * std::pow(s.access.kappa_bs * s.radio.target_sinr, x) / sinc);
            worst = std::max(worst, std::abs(terr_coverage(s) - closed));
        }
    report(2, "closed-form reduction", worst <= 1e-6 && t.seconds() < 1.0, fmt("max gap = %.2e over 3x3", worst), t);
}

void criterion3() {
    Timer t;
    double worst = 0.0, worst_slack = 1.0;
    bool ok = true;
    std::uint64_t seed = kSeed;
    for (double lb : {0.001, 0.01, 0.1})
        for (double ld : {0.1, 1.0, 10.0}) {
            const Scenario s = defaults_with(ld, lb);
            const MCEstimate e = mc::simulate_terr_link(s, kTrials, seed++);
            const double gap = std::abs(terr_coverage(s) - e.mean);
            const double tol = std::max(0.01, 3.0 * e.ci_halfwidth);
            ok = ok && gap <= tol;
            worst = std::max(worst, gap);
            worst_slack = std::min(worst_slack, tol - gap);
        }
    report(3, "MC vs analytic, terrestrial", ok, fmt("max gap = %.4f, min slack = %.4f", worst, worst_slack), t);
}

struct SatPoint {
    int n_sats;
    double lambda_d;
    double analytic_sat;
    double analytic_terr;
    HybridEstimate mc;
};

// Hybrid MC over the satellite grid; the interference banks are shared
// with the constellation-bound criterion.
std::vector<SatPoint> sat_grid(const std::map<double, std::vector<double>>& banks) {
    std::vector<SatPoint> pts;
    for (double ld : {0.1, 1.0})
        for (int n : {200, 500, 1000}) {
            const Scenario s = defaults_with(ld, 0.01, n);
            const CoverageModel m(s);
            pts.push_back({n, ld, m.sat(), m.terr(),
                           mc::simulate_hybrid(s, ConstellationKind::uniform_random, kTrials, kSeed, {}, banks.at(ld))});
        }
    return pts;
}

void criterion4(const std::vector<SatPoint>& pts, const Timer& t) {
    bool ok = true;
    std::string detail = "gaps:";
    for (const SatPoint& p : pts) {
        const double gap = std::abs(p.analytic_sat - p.mc.sat.mean);
        ok = ok && gap <= 0.03;
        detail += fmt(" N=%d,ld=%g:%.4f", p.n_sats, p.lambda_d, gap);
    }
    report(4, "MC vs analytic, satellite", ok, detail, t);
}

void criterion5(const std::vector<SatPoint>& pts) {
    Timer t;
    bool ok = true;
    double worst_mc = 0.0;
    for (const SatPoint& p : pts) {
        const CoverageResult r = CoverageModel(defaults_with(p.lambda_d, 0.01, p.n_sats)).hybrid(p.n_sats, 1e-8);
        ok = ok && r.p_hybrid == combine_hybrid(r.p_sat, r.p_terr);
        ok = ok && r.p_hybrid >= std::max(r.p_sat, r.p_terr);
        const MCEstimate& s = p.mc.sat;
        const MCEstimate& b = p.mc.terr;
        const MCEstimate& h = p.mc.hybrid;
        // delta-method CI of the combined marginals, added to the hybrid CI
        const double ci_comb = std::hypot((1.0 - b.mean) * s.ci_halfwidth, (1.0 - s.mean) * b.ci_halfwidth);
        const double gap = std::abs(h.mean - combine_hybrid(s.mean, b.mean));
        ok = ok && gap <= h.ci_halfwidth + ci_comb;
        ok = ok && h.successes >= std::max(s.successes, b.successes);
        worst_mc = std::max(worst_mc, gap / (h.ci_halfwidth + ci_comb));
    }
    for (double lb : {0.001, 0.01, 0.1})
        for (double ld : {0.1, 1.0, 10.0}) {
            const CoverageResult r = CoverageModel(defaults_with(ld, lb)).hybrid(500, lb * kPerKm2);
            ok = ok && r.p_hybrid == combine_hybrid(r.p_sat, r.p_terr);
            ok = ok && r.p_hybrid >= std::max(r.p_sat, r.p_terr);
        }
    report(5, "hybrid identity", ok, fmt("analytic exact on both grids; MC gap / combined CI <= %.3f", worst_mc), t);
}

void criterion6() {
    Timer t;
    const Scenario s = default_scenario();
    const CoverageResult r = CoverageModel(s).hybrid(s.cfg.num_satellites, 1e-12);
    const double gap = std::abs(r.p_hybrid - r.p_sat);
    report(6, "limit lambda_b -> 0", gap < 1e-6,
           fmt("|p_c - p_s| = %.4e at lambda_b = 1e-12 /m2 (p_b = %.4e)", gap, r.p_terr), t);
}

void criterion7() {
    Timer t;
    bool ok = true;
    std::string detail = "p_c(ld):";
    double prev = 2.0;
    for (double ld : {0.1, 1.0, 10.0, 100.0}) {
        const double p = CoverageModel(defaults_with(ld)).hybrid(500, 1e-8).p_hybrid;
        ok = ok && p < prev;
        prev = p;
        detail += fmt(" %.4g", p);
    }
    bool ok_n = true;
    for (double ld : {0.1, 1.0, 10.0, 100.0}) {
        const CoverageModel m(defaults_with(ld));
        double last = -1.0;
        for (int n : {100, 200, 500, 1000, 2000}) {
            const double p = m.hybrid(n, 1e-8).p_hybrid;
            ok_n = ok_n && p > last;
            last = p;
        }
    }
    detail += ok_n ? "; increasing in N_s at every lambda_d" : "; NOT increasing in N_s";
    report(7, "interference degradation", ok && ok_n, detail, t);
}

void criterion8() {
    Timer t;
    bool ok = true;
    int checks = 0;
    // lambda_d = 0.1 per km^2: at 1 per km^2 the satellite supremum is ~0.3 and
    // satellite-side targets of 0.6-0.9 are infeasible. The BS densities keep
    // p_terr below every target so each design needs at least one satellite.
    const CoverageModel light(defaults_with(0.1));
    for (double target : {0.6, 0.8, 0.9})
        for (double lb : {1e-3, 3e-3, 1e-2, 3e-2, 6e-2}) {
            const double lbm = lb * kPerKm2;
            const SatelliteDesign d = design::required_satellites(target, lbm, light);
            const double p = light.hybrid(d.n_sats, lbm).p_hybrid;
            const double delta = d.n_sats > 0 ? p - light.hybrid(d.n_sats - 1, lbm).p_hybrid : 0.0;
            ok = ok && d.n_sats > 0 && p >= target - 1e-3 && p <= target + delta;
            ++checks;
        }
    const CoverageModel busy(defaults_with(1.0));
    for (double target : {0.6, 0.8, 0.9})
        for (int n : {20, 50, 200, 500, 1000}) {
            const BsDensityDesign d = design::required_bs_density(target, n, busy);
            const double p = busy.hybrid(n, d.bs_density).p_hybrid;
            ok = ok && d.bracket_hi / d.bracket_lo - 1.0 <= 1e-6;
            ok = ok && p >= target && busy.hybrid(n, d.bracket_lo).p_hybrid < target;
            ok = ok && p <= target + 1e-3;
            ++checks;
        }
    report(8, "design round trip", ok && t.seconds() < 60.0, fmt("%d round trips", checks), t);
}

void criterion9(const std::vector<double>& bank, const Timer& t) {
    bool ok = true;
    std::string detail = "MC - analytic:";
    for (int n : {100, 400}) {
        const Scenario s = defaults_with(1.0, 0.01, n);
        const double analytic = CoverageModel(s).sat();
        for (auto kind : {ConstellationKind::walker_delta, ConstellationKind::walker_star}) {
            const MCEstimate e = mc::simulate_sat_link(s, kind, kTrials, kSeed, {}, bank);
            ok = ok && e.mean >= analytic - 0.02;
            detail += fmt(" %s/%d:%+.4f", kind == ConstellationKind::walker_delta ? "delta" : "star", n,
                          e.mean - analytic);
        }
    }
    report(9, "constellation bound", ok, detail, t);
}

void criterion10() {
    Timer t;
    auto render = [](cli::Command c, const std::string& axis, std::vector<double> values, int workers) {
        cli::RunConfig cfg;
        cfg.command = c;
        cfg.axis = axis;
        cfg.values = std::move(values);
        cfg.trials = 5000;
        cfg.seed = 99;
        cfg.workers = workers;
        std::ostringstream os;
        cli::write_csv(os, cli::execute(cfg, defaults_with(0.1)));
        return os.str();
    };
    bool ok = true;
    for (int rep = 0; rep < 2; ++rep) {
        const std::string a = render(cli::Command::simulate, "bs_density", {0.001, 0.01, 0.1}, 1);
        ok = ok && a == render(cli::Command::simulate, "bs_density", {0.001, 0.01, 0.1}, 1 + 3 * rep);
        const std::string b = render(cli::Command::compare_constellations, "num_satellites", {100, 400}, 1);
        ok = ok && b == render(cli::Command::compare_constellations, "num_satellites", {100, 400}, 2 + rep);
    }
    report(10, "determinism", ok, "CSV byte-identical across repeats and 1-4 workers", t);
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        Timer t45;
        std::map<double, std::vector<double>> banks;
        for (double ld : {0.1, 1.0}) banks[ld] = mc::sample_sat_interference(defaults_with(ld), kTrials, kSeed);
        const double bank_seconds = t45.seconds();
        const auto pts = sat_grid(banks);
        criterion4(pts, t45);
        criterion5(pts);
        criterion6();
        criterion7();
        criterion8();
        Timer t9;
        criterion9(banks.at(1.0), t9);
        criterion10();
        std::printf("interference banks: %.1f s (shared by criteria 4, 5, 9)\n", bank_seconds);
    } catch (const std::exception& e) {
        std::printf("[FAIL] aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "PASSED", failures);
    return failures ? 1 : 0;
}
