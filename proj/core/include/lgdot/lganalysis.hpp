#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgdot/cascade.hpp"

// Leggett-Garg quantities built on the stationarity assumption: the
// correlator K(t) is measured in two independent runs at delays t and 2t
// from the same initial state, and combined into
//   K+ = K(2t) + 2 K(t) >= -1,   K- = K(2t) - 2 K(t) >= -1.

namespace lgdot {

struct LGPoint {
  double t = 0.0;     // ps
  double k_t = 0.0;   // K(t)
  double k_2t = 0.0;  // K(2t)
  double k_plus = 0.0;
  double k_minus = 0.0;
};

enum class LGBranch { plus, minus };

enum class SweepAxis { s_fss, g_noise, temperature, gate_width };

std::string to_string(SweepAxis axis);
std::optional<SweepAxis> parse_sweep_axis(const std::string& name);

struct SweepResult {
  std::string axis_name;
  std::vector<double> axis_values;
  std::vector<std::vector<LGPoint>> curves;  // one per axis value
  std::vector<double> min_kminus;
  std::vector<std::optional<double>> first_violation_t;  // ps, absent = none
};

// Joint detection probabilities of the photon pair in the +/- basis,
// conditioned on the first photon found in |+>:
//   p_pp = <++|rho|++> / (<++|rho|++> + <+-|rho|+->),  p_pm = 1 - p_pp.
// Requires a normalized pair state; throws DegenerateInput when the
// conditioning probability vanishes.
std::pair<double, double> joint_probabilities(const PairState& ps);

// K = (rho_14 + rho_41) / (rho_11 + rho_22 + rho_33 + rho_44). For states
// honoring the cascade zero pattern this equals p_pp - p_pm; the two
// routes are checked against each other in the test suite rather than
// assumed.
double correlator(const PairState& ps);

// Gate-averaged correlator over delays tau in [t, t + gate_width]:
// numerator and denominator are integrated separately over the
// unnormalized mixture, which weights every delay by its coincidence
// yield. gate_width == 0 returns the instantaneous correlator exactly.
double gated_correlator(const PairDynamics& dyn, double t);
double gated_correlator(const DotParameters& p, double t);

LGPoint lg_point(const PairDynamics& dyn, double t);
LGPoint lg_point(const DotParameters& p, double t);

// First time in [0, t_max] where the chosen branch drops below
// -1 - tol::violation_margin: grid scan at spacing dt, then bisection to
// time accuracy dt * 1e-3. Absent when no violation occurs.
std::optional<double> find_first_violation(const DotParameters& p,
                                           LGBranch which, double t_max,
                                           double dt);

// Evaluates lg_point over t_grid for every value of the swept axis.
// Deterministic ordering; per-curve minimum of K- and first violation
// time are filled in.
SweepResult sweep(const DotParameters& p_base, SweepAxis axis,
                  const std::vector<double>& values,
                  const std::vector<double>& t_grid);

}  // namespace lgdot
