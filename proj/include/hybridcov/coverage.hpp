#pragma once

#include <string_view>

#include "hybridcov/quadrature.hpp"
#include "hybridcov/scenario.hpp"

namespace hybridcov {

enum class Method { analytic, monte_carlo };

std::string_view to_string(Method m);

struct CoverageResult {
    double p_sat = 0.0;
    double p_terr = 0.0;
    double p_hybrid = 0.0;
    Method method = Method::analytic;
    double ci_halfwidth = 0.0;
};

/// Either link suffices: 1 - (1 - p_sat)(1 - p_terr).
inline double combine_hybrid(double p_sat, double p_terr) { return 1.0 - (1.0 - p_sat) * (1.0 - p_terr); }

/// Analytic coverage for one scenario. The mean satellite interference and the
/// footprint angle do not depend on N_s or lambda_b, so they are computed once
/// here and reused by sweeps over those two parameters.
class CoverageModel {
public:
    explicit CoverageModel(Scenario scn, quad::Tolerance tol = {});

    const Scenario& scenario() const { return scn_; }
    double mean_sat_interference() const { return mean_sat_interference_; }
    double max_earth_zenith() const { return phi_m_; }

    /// Satellite coverage for a (possibly fractional) constellation size.
    double sat(double num_satellites) const;
    double sat() const { return sat(static_cast<double>(scn_.cfg.num_satellites)); }
    /// Limit of sat(N) as N grows without bound: a satellite at the zenith.
    double sat_supremum() const;

    double terr(double bs_density) const;
    double terr() const { return terr(scn_.dens.bs_density); }

    CoverageResult hybrid(double num_satellites, double bs_density) const;
    CoverageResult hybrid() const;

private:
    double sat_link_survival(double phi) const;

    Scenario scn_;
    quad::Tolerance tol_;
    double phi_m_;
    double mean_sat_interference_;
};

double sat_coverage(const Scenario& scn);
double terr_coverage(const Scenario& scn);
CoverageResult hybrid_coverage(const Scenario& scn);

/// W_b = 0 reduction of the terrestrial coverage integral:
/// lambda_b / (lambda_b + D lambda_d (kappa_b gamma)^(2/a) / sinc(2/a)).
double terr_coverage_noise_free(const Scenario& scn);

}  // namespace hybridcov
