#include "lgdot/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lgdot::oracle {

void AnalyticParams::validate() const {
  if (!(s_fss >= 0.0)) throw InvalidInput("analytic s_fss must be >= 0");
  if (!(gamma_total >= 0.0)) throw InvalidInput("analytic gamma_total must be >= 0");
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidInput("analytic eta must be in [0, 1]");
  if (!(g >= 0.0)) throw InvalidInput("analytic g must be >= 0");
}

double analytic_correlator(const AnalyticParams& a, double t) {
  a.validate();
  if (!(t >= 0.0)) throw InvalidInput("analytic correlator time must be >= 0");
  const double theta = a.s_fss * t / constants::hbar_uev_ps;
  return a.eta / (1.0 + a.g) * std::exp(-a.gamma_total * t) * std::cos(theta);
}

ComplexMatrix rk4_reference(const ComplexMatrix& rho0, const ComplexMatrix& h0,
                            const std::vector<LindbladChannel>& channels,
                            double t, long steps) {
  require_finite(rho0, "rho0");
  require_finite(h0, "h0");
  if (!(t >= 0.0)) throw InvalidInput("integration time must be >= 0");
  if (steps < 1000) throw InvalidInput("rk4_reference requires steps >= 1000");

  double max_rate = 0.0;
  for (const auto& ch : channels) max_rate = std::max(max_rate, ch.rate());
  const double h0_scale = h0.size() > 0 ? h0.cwiseAbs().maxCoeff() : 0.0;

  const double h = t / static_cast<double>(steps);
  if (max_rate > 0.0 && h > 0.01 / max_rate) {
    std::ostringstream os;
    os << "rk4_reference step " << h << " exceeds 0.01/max_rate = " << 0.01 / max_rate;
    throw InvalidInput(os.str());
  }
  if (h0_scale > 0.0) {
    const double period = 2.0 * std::numbers::pi / h0_scale;
    if (h > period / 100.0) {
      std::ostringstream os;
      os << "rk4_reference step " << h << " exceeds period/100 = " << period / 100.0;
      throw InvalidInput(os.str());
    }
  }
  if (t == 0.0) return rho0;

  ComplexMatrix rho = rho0;
  ComplexMatrix k1, k2, k3, k4;
  for (long i = 0; i < steps; ++i) {
    k1 = lindblad_rhs(rho, h0, channels);
    k2 = lindblad_rhs(rho + (0.5 * h) * k1, h0, channels);
    k3 = lindblad_rhs(rho + (0.5 * h) * k2, h0, channels);
    k4 = lindblad_rhs(rho + h * k3, h0, channels);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

LgExtremum analytic_lg_minimum(Branch which) {
  // d/dtheta [cos 2t -+ 2 cos t] = -2 sin 2t +- 2 sin t = 0 at cos t = +-1/2.
  const double pi = std::numbers::pi;
  if (which == Branch::minus) return {pi / 3.0, -1.5};
  return {2.0 * pi / 3.0, -1.5};
}

}  // namespace lgdot::oracle
