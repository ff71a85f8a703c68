#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hybridcov/errors.hpp"

namespace hybridcov::quad {

struct Tolerance {
    double rel = 1e-8;
    double abs = 1e-14;
    unsigned max_depth = 30;
};

struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

namespace detail {

template <class F>
Estimate gk21(F&& f, double lo, double hi, const Tolerance& tol) {
    Estimate out;
    double l1 = 0.0;
    // Tighten the per-segment target so the summed estimate still meets tol.rel.
    out.value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
        f, lo, hi, tol.max_depth, 0.25 * tol.rel, &out.error, &l1);
    return out;
}

inline void check(const Estimate& e, const Tolerance& tol, double lo, double hi) {
    if (std::isfinite(e.value) && e.error <= std::max(tol.rel * std::abs(e.value), tol.abs)) return;
    std::ostringstream msg;
    msg.precision(17);
    msg << "quadrature did not converge on [" << lo << ", " << hi << "]: estimate " << e.value
        << ", error bound " << e.error;
    throw NumericalError(msg.str(), e.value, e.error);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G10/K21) integral of f over [lo, hi]. `hi` may be
/// +infinity. Throws NumericalError carrying the best estimate and its error
/// bound when |error| > max(rel |I|, abs).
template <class F>
double integrate(F&& f, double lo, double hi, const Tolerance& tol = {}) {
    if (lo == hi) return 0.0;
    const Estimate e = detail::gk21(f, lo, hi, tol);
    detail::check(e, tol, lo, hi);
    return e.value;
}

template <class F>
double integrate(F&& f, double lo, double hi, double rel_tol, double abs_tol) {
    return integrate(f, lo, hi, Tolerance{rel_tol, abs_tol});
}

/// Integral over consecutive segments [p0, p1], [p1, p2], ... Use breakpoints to
/// expose features (peaks, kinks) that a single panel could step over.
template <class F>
double integrate_segments(F&& f, std::span<const double> points, const Tolerance& tol = {}) {
    Estimate total;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] == points[i + 1]) continue;
        const Estimate e = detail::gk21(f, points[i], points[i + 1], tol);
        total.value += e.value;
        total.error += e.error;
    }
    if (points.size() >= 2) detail::check(total, tol, points.front(), points.back());
    return total.value;
}

template <class F>
double integrate_segments(F&& f, std::initializer_list<double> points, const Tolerance& tol = {}) {
    return integrate_segments(f, std::span<const double>(points.begin(), points.size()), tol);
}

}  // namespace hybridcov::quad
