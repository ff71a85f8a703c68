#pragma once

#include <span>
#include <string>
#include <vector>

#include "hybridcov/coverage.hpp"

namespace hybridcov {

struct DesignOptions {
    double max_satellites = 1e7;
    /// Bisection bracket for BS density, per m^2. The lower end is returned
    /// when even the sparsest network meets the target.
    double min_bs_density = 1e-12;
    double max_bs_density = 1e-2;
    double bs_density_rel_tol = 1e-6;
};

struct SatelliteDesign {
    int n_sats = 0;              // smallest N with p_hybrid >= target
    double continuous = 0.0;     // root of the continuous relaxation (0 when not solved)
    double p_hybrid = 0.0;       // at n_sats
    double p_hybrid_below = 0.0; // at n_sats - 1 (equals p_terr when n_sats <= 1)
};

struct BsDensityDesign {
    double bs_density = 0.0;  // per m^2, feasible end of the final bracket
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double p_hybrid = 0.0;
};

struct OperatingPoint {
    int n_sats = 0;
    double bs_density = 0.0;  // per m^2
    double target_qos = 0.0;
    double achieved = 0.0;    // best achievable value when infeasible
    bool feasible = true;
    std::string note;
};

enum class SweepAxis { bs_density, num_satellites };

namespace design {

/// Minimum constellation size meeting `target` hybrid coverage at `bs_density`.
/// Returns n_sats = 0 when the terrestrial network alone suffices. Throws
/// InfeasibleError (carrying the satellite-side supremum) when the required
/// satellite coverage is out of reach.
SatelliteDesign required_satellites(double target, double bs_density, const CoverageModel& model,
                                    const DesignOptions& opts = {});

/// Minimum BS density meeting `target` with `n_sats` satellites. Returns 0 when
/// the satellites alone suffice; throws InfeasibleError with p_terr at the
/// bracket ceiling when even max_bs_density falls short.
BsDensityDesign required_bs_density(double target, int n_sats, const CoverageModel& model,
                                    const DesignOptions& opts = {});

/// One point per sweep value; infeasible points are flagged, not dropped.
std::vector<OperatingPoint> operating_curve(double target, SweepAxis axis, std::span<const double> sweep,
                                            const CoverageModel& model, const DesignOptions& opts = {});

}  // namespace design
}  // namespace hybridcov
