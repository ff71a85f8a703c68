#include "hybridcov/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hybridcov/linkstats.hpp"

namespace hybridcov {

using std::numbers::pi;

std::string_view to_string(Method m) {
    return m == Method::analytic ? "analytic" : "monte_carlo";
}

CoverageModel::CoverageModel(Scenario scn, quad::Tolerance tol)
    : scn_(std::move(scn)),
      tol_(tol),
      phi_m_(geo::max_earth_zenith(scn_.cfg, scn_.geo)),
      mean_sat_interference_(linkstats::mean_sat_interference(scn_, tol_)) {}

double CoverageModel::sat_link_survival(double phi) const {
    const double floor = scn_.radio.target_sinr * (mean_sat_interference_ + scn_.radio.sat_noise);
    const double x = floor / (scn_.radio.eirp * channel::freespace_gain(phi, scn_.geo, scn_.sat));
    return channel::excess_gain_survival(x, channel::los_probability(phi, scn_.geo, scn_.sat), scn_.sat);
}

double CoverageModel::sat(double num_satellites) const {
    if (!(num_satellites > 0.0)) return 0.0;
    // With v = (N/2)(1 - cos phi) the contact-angle density becomes exp(-v) dv
    // on [0, v_m]; the integrand no longer sharpens as N grows. phi grows like
    // sqrt(v), so integrate in t = sqrt(v) to remove the cusp at the origin.
    const double n = num_satellites;
    const double s = std::sin(0.5 * phi_m_);
    const double v_max = n * s * s;
    // exp(-60) ~ 1e-26: nothing beyond contributes at double precision.
    const double t_hi = std::sqrt(std::min(v_max, 60.0));
    auto integrand = [&](double t) {
        const double phi = 2.0 * std::asin(std::min(1.0, t / std::sqrt(n)));
        return 2.0 * t * sat_link_survival(phi) * std::exp(-t * t);
    };
    std::vector<double> points{0.0};
    for (double b : {0.5, 2.0, 6.0, 16.0})
        if (std::sqrt(b) < t_hi) points.push_back(std::sqrt(b));
    points.push_back(t_hi);
    return std::clamp(quad::integrate_segments(integrand, points, tol_), 0.0, 1.0);
}

double CoverageModel::sat_supremum() const { return sat_link_survival(0.0); }

double CoverageModel::terr(double bs_density) const {
    if (!(bs_density > 0.0)) return 0.0;
    const Scenario& s = scn_;
    const double a = s.terr.path_loss_exponent;
    const double link = s.radio.eirp * s.terr.model_constant * s.terr.path_gain_constant;
    const double gamma = s.radio.target_sinr;
    const double lb = bs_density;

    // u = pi lambda_b r^2 turns the contact-distance density into exp(-u) du.
    // The remaining exponent is (1 + A) u + B u^(a/2); u_star bounds its unit
    // level set from below, so in w = u / u_star the integrand is <= exp(-w) for w >= 1.
    const double active = s.access.duty_cycle * s.dens.device_density;
    const double A = active * std::pow(s.access.kappa_bs * gamma, 2.0 / a) / (lb * linkstats::sinc(2.0 / a));
    const double B = gamma * s.radio.bs_noise * std::pow(pi * lb, -0.5 * a) / link;
    double u_star = 1.0 / (1.0 + A);
    if (B > 0.0) u_star = std::min(u_star, std::pow(B, -2.0 / a));

    auto integrand = [&](double w) {
        const double u = u_star * w;
        const double r = std::sqrt(u / (pi * lb));
        const double sv = gamma * std::pow(r, a) / link;
        return linkstats::terr_interference_laplace(sv, s) * std::exp(-sv * s.radio.bs_noise) * std::exp(-u);
    };
    const double inf = std::numeric_limits<double>::infinity();
    return std::clamp(u_star * quad::integrate_segments(integrand, {0.0, 1.0, 8.0, inf}, tol_), 0.0, 1.0);
}

CoverageResult CoverageModel::hybrid(double num_satellites, double bs_density) const {
    CoverageResult out;
    out.p_sat = sat(num_satellites);
    out.p_terr = terr(bs_density);
    out.p_hybrid = combine_hybrid(out.p_sat, out.p_terr);
    out.method = Method::analytic;
    return out;
}

CoverageResult CoverageModel::hybrid() const {
    return hybrid(static_cast<double>(scn_.cfg.num_satellites), scn_.dens.bs_density);
}

double sat_coverage(const Scenario& scn) { return CoverageModel(scn).sat(); }
double terr_coverage(const Scenario& scn) { return CoverageModel(scn).terr(); }
CoverageResult hybrid_coverage(const Scenario& scn) { return CoverageModel(scn).hybrid(); }

double terr_coverage_noise_free(const Scenario& scn) {
    const double a = scn.terr.path_loss_exponent;
    const double lb = scn.dens.bs_density;
    const double active = scn.access.duty_cycle * scn.dens.device_density;
    const double c = active * std::pow(scn.access.kappa_bs * scn.radio.target_sinr, 2.0 / a) / linkstats::sinc(2.0 / a);
    return lb / (lb + c);
}

}  // namespace hybridcov
