#pragma once

#include <vector>

#include "lgdot/densmat.hpp"

// Independent verification machinery: closed forms for the flip-free
// cascade and a fixed-step reference integrator. Nothing here shares a
// code path with the matrix-exponential propagation it is used to check.

namespace lgdot::oracle {

// Parameters of the flip-free regime: splitting S, total coherence decay
// rate of the normalized correlator, spectral-overlap weight eta and
// background-noise weight g.
struct AnalyticParams {
  double s_fss = 0.0;        // ueV
  double gamma_total = 0.0;  // 1/ps; decay rate of the normalized pair
                             // coherence. Radiative decay cancels against
                             // the coincidence trace, so for the standard
                             // channel set this is the pure-dephasing rate.
  double eta = 1.0;          // [0, 1]
  double g = 0.0;            // >= 0

  void validate() const;
};

// Exact flip-free correlator:
//   K(t) = eta/(1+g) * exp(-gamma_total * t) * cos(S t / hbar)
double analytic_correlator(const AnalyticParams& a, double t);

// Classic fixed-step RK4 integration of the master equation, used only
// as a comparison reference. Requires steps >= 1000 and a step size no
// larger than min(0.01 / max_rate, period / 100), where max_rate is the
// largest channel rate and period = 2 pi / max|h0| entry covers the
// coherent oscillation.
ComplexMatrix rk4_reference(const ComplexMatrix& rho0, const ComplexMatrix& h0,
                            const std::vector<LindbladChannel>& channels,
                            double t, long steps);

enum class Branch { plus, minus };

struct LgExtremum {
  double theta;  // rad
  double value;
};

// Extremum of the ideal-model Leggett-Garg combinations
//   minus: min over theta of cos(2 theta) - 2 cos(theta) = -3/2 at pi/3
//   plus:  min over theta of cos(2 theta) + 2 cos(theta) = -3/2 at 2 pi/3
// (minimize 2x^2 -+ 2x - 1 over x = cos theta; minimum at x = +-1/2).
LgExtremum analytic_lg_minimum(Branch which = Branch::minus);

}  // namespace lgdot::oracle
