#include "hybridcov/designer.hpp"

#include <cmath>
#include <stdexcept>

#include "hybridcov/errors.hpp"
#include "hybridcov/format.hpp"

namespace hybridcov::design {

namespace {

void check_target(double target) {
    if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("design target must lie in (0, 1)");
}

}  // namespace

SatelliteDesign required_satellites(double target, double bs_density, const CoverageModel& model,
                                    const DesignOptions& opts) {
    check_target(target);
    SatelliteDesign out;
    const double p_terr = model.terr(bs_density);
    const double needed = (target - p_terr) / (1.0 - p_terr);
    if (needed <= 0.0) {
        out.p_hybrid = out.p_hybrid_below = p_terr;
        return out;
    }
    const double sup = model.sat_supremum();
    if (needed >= sup)
        throw InfeasibleError("satellite coverage saturates at " + format_double(sup) + " below the required " +
                                  format_double(needed),
                              sup);

    auto p_hybrid = [&](double n) { return combine_hybrid(model.sat(n), p_terr); };

    // p_sat(0) = 0 < needed, so lo is always infeasible; grow hi until feasible.
    double lo = 0.0;
    double hi = 1.0;
    while (model.sat(hi) < needed) {
        lo = hi;
        hi *= 2.0;
        if (hi > opts.max_satellites)
            throw InfeasibleError("required constellation exceeds " + format_double(opts.max_satellites) +
                                      " satellites",
                                  model.sat(opts.max_satellites));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-6 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (model.sat(mid) >= needed ? hi : lo) = mid;
    }
    out.continuous = hi;

    // Integer fix-up against the hybrid target itself.
    int n = static_cast<int>(std::ceil(hi));
    while (n > 1 && p_hybrid(n - 1) >= target) --n;
    while (p_hybrid(n) < target) ++n;
    out.n_sats = n;
    out.p_hybrid = p_hybrid(n);
    out.p_hybrid_below = n > 1 ? p_hybrid(n - 1) : p_terr;
    return out;
}

BsDensityDesign required_bs_density(double target, int n_sats, const CoverageModel& model,
                                    const DesignOptions& opts) {
    check_target(target);
    BsDensityDesign out;
    const double p_sat = model.sat(static_cast<double>(n_sats));
    const double needed = (target - p_sat) / (1.0 - p_sat);
    if (needed <= 0.0) {
        out.p_hybrid = p_sat;
        return out;
    }
    auto p_hybrid = [&](double lb) { return combine_hybrid(p_sat, model.terr(lb)); };

    double lo = opts.min_bs_density;
    if (p_hybrid(lo) >= target) {
        out.bs_density = out.bracket_lo = out.bracket_hi = lo;
        out.p_hybrid = p_hybrid(lo);
        return out;
    }
    double hi = lo;
    while (p_hybrid(hi) < target) {
        lo = hi;
        hi *= 10.0;
        if (hi > opts.max_bs_density) {
            const double ceiling = model.terr(opts.max_bs_density);
            throw InfeasibleError("terrestrial coverage reaches only " + format_double(ceiling) +
                                      " at the density ceiling",
                                  ceiling);
        }
    }
    // Geometric bisection; lo stays infeasible, hi feasible.
    for (int it = 0; it < 200 && hi / lo - 1.0 > opts.bs_density_rel_tol; ++it) {
        const double mid = std::sqrt(lo * hi);
        (p_hybrid(mid) >= target ? hi : lo) = mid;
    }
    out.bs_density = hi;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.p_hybrid = p_hybrid(hi);
    return out;
}

std::vector<OperatingPoint> operating_curve(double target, SweepAxis axis, std::span<const double> sweep,
                                            const CoverageModel& model, const DesignOptions& opts) {
    if (sweep.empty()) throw std::invalid_argument("operating_curve: empty sweep");
    std::vector<OperatingPoint> out;
    out.reserve(sweep.size());
    for (double value : sweep) {
        OperatingPoint pt;
        pt.target_qos = target;
        try {
            if (axis == SweepAxis::bs_density) {
                pt.bs_density = value;
                const SatelliteDesign d = required_satellites(target, value, model, opts);
                pt.n_sats = d.n_sats;
                pt.achieved = d.p_hybrid;
            } else {
                pt.n_sats = static_cast<int>(std::lround(value));
                const BsDensityDesign d = required_bs_density(target, pt.n_sats, model, opts);
                pt.bs_density = d.bs_density;
                pt.achieved = d.p_hybrid;
            }
        } catch (const InfeasibleError& e) {
            pt.feasible = false;
            pt.note = e.what();
            pt.achieved = axis == SweepAxis::bs_density
                               ? combine_hybrid(e.supremum(), model.terr(value))
                               : combine_hybrid(model.sat(static_cast<double>(pt.n_sats)), e.supremum());
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace hybridcov::design
