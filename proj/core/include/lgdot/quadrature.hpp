#pragma once

#include <array>
#include <functional>

namespace lgdot {

// Adaptive Simpson quadrature of a two-component integrand over [a, b],
// sharing evaluation points between the components (the gated correlator
// integrates a numerator and a denominator over the same window).
//
// The interval is first split into min_panels uniform panels (callers
// enforce resolution rules, e.g. panels per oscillation period); each
// panel is then refined recursively until the Richardson error estimate
// of every component drops below rel_tol times the coarse magnitude of
// the larger component.
std::array<double, 2> integrate_adaptive_simpson(
    const std::function<std::array<double, 2>(double)>& f, double a, double b,
    double rel_tol, int min_panels);

}  // namespace lgdot
