#include "lgdot/lganalysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lgdot/quadrature.hpp"

namespace lgdot {

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::s_fss: return "s_fss";
    case SweepAxis::g_noise: return "g_noise";
    case SweepAxis::temperature: return "temperature";
    case SweepAxis::gate_width: return "gate_width";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_sweep_axis(const std::string& name) {
  if (name == "s_fss") return SweepAxis::s_fss;
  if (name == "g_noise") return SweepAxis::g_noise;
  if (name == "temperature") return SweepAxis::temperature;
  if (name == "gate_width") return SweepAxis::gate_width;
  return std::nullopt;
}

std::pair<double, double> joint_probabilities(const PairState& ps) {
  if (!ps.normalized()) {
    throw InvalidInput("joint_probabilities requires a normalized pair state");
  }
  // |+ +> and |+ -> in the {HH, HV, VH, VV} basis.
  Eigen::Vector4cd plus_plus, plus_minus;
  plus_plus << 0.5, 0.5, 0.5, 0.5;
  plus_minus << 0.5, -0.5, 0.5, -0.5;
  const double a = (plus_plus.adjoint() * ps.rho() * plus_plus)(0).real();
  const double b = (plus_minus.adjoint() * ps.rho() * plus_minus)(0).real();
  const double den = a + b;
  if (!(den > tol::degenerate_trace)) {
    throw DegenerateInput("conditioning probability vanished in joint_probabilities");
  }
  return {a / den, b / den};
}

double correlator(const PairState& ps) {
  const Complex tr = ps.rho().trace();
  if (!(std::abs(tr) > tol::degenerate_trace)) {
    throw DegenerateInput("pair state trace vanished in correlator");
  }
  const Complex num = ps.rho()(0, 3) + ps.rho()(3, 0);
  if (std::abs(num.imag()) > tol::algebra_identity * std::max(1.0, std::abs(tr))) {
    throw NumericsError("correlator numerator has an imaginary residue");
  }
  return num.real() / tr.real();
}

namespace {

double check_range(double k, const char* what) {
  if (!std::isfinite(k) || std::abs(k) > 1.0 + tol::correlator_range) {
    std::ostringstream os;
    os << what << " left [-1, 1]: " << k;
    throw NumericsError(os.str());
  }
  return k;
}

double violation_threshold() { return -1.0 - tol::violation_margin; }

}  // namespace

double gated_correlator(const PairDynamics& dyn, double t) {
  if (!(t >= 0.0)) throw InvalidInput("gated_correlator requires t >= 0");
  const double width = dyn.params().gate_width;
  if (width == 0.0) return check_range(correlator(dyn.total(t)), "correlator");

  // Force at least 16 panels per oscillation period inside the window.
  int panels = 4;
  if (dyn.params().s_fss > 0.0) {
    const double period =
        2.0 * std::numbers::pi * constants::hbar_uev_ps / dyn.params().s_fss;
    panels = std::max(panels, static_cast<int>(std::ceil(16.0 * width / period)));
  }

  const auto integrand = [&dyn](double tau) -> std::array<double, 2> {
    const ComplexMatrix mix = dyn.mixture_unnormalized(tau);
    return {(mix(0, 3) + mix(3, 0)).real(), mix.trace().real()};
  };
  const auto integral = integrate_adaptive_simpson(integrand, t, t + width,
                                                   tol::quadrature_rel, panels);
  if (!(integral[1] > 0.0) || !std::isfinite(integral[1])) {
    std::ostringstream os;
    os << "gated coincidence weight vanished at t = " << t;
    throw DegenerateInput(os.str());
  }
  return check_range(integral[0] / integral[1], "gated correlator");
}

double gated_correlator(const DotParameters& p, double t) {
  return gated_correlator(PairDynamics(p), t);
}

LGPoint lg_point(const PairDynamics& dyn, double t) {
  // Two independent evolutions from the identical initial state, one
  // measured at t and one at 2t.
  LGPoint point;
  point.t = t;
  point.k_t = gated_correlator(dyn, t);
  point.k_2t = gated_correlator(dyn, 2.0 * t);
  point.k_plus = point.k_2t + 2.0 * point.k_t;
  point.k_minus = point.k_2t - 2.0 * point.k_t;
  return point;
}

LGPoint lg_point(const DotParameters& p, double t) {
  return lg_point(PairDynamics(p), t);
}

namespace {

double branch_value(const LGPoint& pt, LGBranch which) {
  return which == LGBranch::plus ? pt.k_plus : pt.k_minus;
}

// Bisection of the first crossing of the violation threshold inside
// (lo, hi], assuming value(lo) >= threshold > value(hi).
double refine_crossing(const PairDynamics& dyn, LGBranch which, double lo,
                       double hi, double accuracy) {
  while (hi - lo > accuracy) {
    const double mid = 0.5 * (lo + hi);
    if (branch_value(lg_point(dyn, mid), which) < violation_threshold()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<double> find_first_violation(const DotParameters& p,
                                           LGBranch which, double t_max,
                                           double dt) {
  if (!(dt > 0.0)) throw InvalidInput("find_first_violation requires dt > 0");
  if (!(t_max > 0.0)) throw InvalidInput("find_first_violation requires t_max > 0");
  const PairDynamics dyn(p);
  const double accuracy = dt * 1e-3;

  double prev_t = 0.0;
  if (branch_value(lg_point(dyn, 0.0), which) < violation_threshold()) {
    return 0.0;
  }
  for (double t = dt;; t += dt) {
    t = std::min(t, t_max);
    if (branch_value(lg_point(dyn, t), which) < violation_threshold()) {
      return refine_crossing(dyn, which, prev_t, t, accuracy);
    }
    if (t >= t_max) return std::nullopt;
    prev_t = t;
  }
}

namespace {

DotParameters with_axis_value(const DotParameters& base, SweepAxis axis,
                              double value) {
  DotParameters p = base;
  switch (axis) {
    case SweepAxis::s_fss: p.set_s_fss(value); break;
    case SweepAxis::g_noise: p.g_noise = value; break;
    case SweepAxis::temperature: p.temperature = value; break;
    case SweepAxis::gate_width: p.gate_width = value; break;
  }
  p.validate();
  return p;
}

// First crossing extracted from an already evaluated curve, refined by
// bisection between the bracketing grid points.
std::optional<double> first_violation_from_curve(
    const PairDynamics& dyn, const std::vector<LGPoint>& curve) {
  for (size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].k_minus < violation_threshold()) {
      const double lo = i == 0 ? 0.0 : curve[i - 1].t;
      const double hi = curve[i].t;
      if (!(hi > lo)) return hi;
      return refine_crossing(dyn, LGBranch::minus, lo, hi, (hi - lo) * 1e-3);
    }
  }
  return std::nullopt;
}

}  // namespace

SweepResult sweep(const DotParameters& p_base, SweepAxis axis,
                  const std::vector<double>& values,
                  const std::vector<double>& t_grid) {
  if (values.empty()) throw InvalidInput("sweep requires at least one axis value");
  if (t_grid.empty()) throw InvalidInput("sweep requires a non-empty time grid");
  for (double t : t_grid)
    if (!(t >= 0.0)) throw InvalidInput("sweep time grid must be nonnegative");

  SweepResult result;
  result.axis_name = to_string(axis);
  result.axis_values = values;
  result.curves.reserve(values.size());

  for (double value : values) {
    const DotParameters p = with_axis_value(p_base, axis, value);
    const PairDynamics dyn(p);
    std::vector<LGPoint> curve;
    curve.reserve(t_grid.size());
    for (double t : t_grid) {
      try {
        curve.push_back(lg_point(dyn, t));
      } catch (const std::exception& e) {
        std::ostringstream os;
        os << "sweep failed at " << result.axis_name << " = " << value
           << ", t = " << t << ": " << e.what();
        throw NumericsError(os.str());
      }
    }
    double min_km = curve.front().k_minus;
    for (const LGPoint& pt : curve) min_km = std::min(min_km, pt.k_minus);
    result.min_kminus.push_back(min_km);
    result.first_violation_t.push_back(first_violation_from_curve(dyn, curve));
    result.curves.push_back(std::move(curve));
  }
  return result;
}

}  // namespace lgdot
