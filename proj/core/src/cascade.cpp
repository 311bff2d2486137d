#include "lgdot/cascade.hpp"

#include <cmath>
#include <sstream>

namespace lgdot {

namespace {

// Exciton basis used internally: index 0 = ground, 1 = |1>, 2 = |2>.
constexpr int kGround = 0;
constexpr int kLow = 1;   // |1>, emits V
constexpr int kHigh = 2;  // |2>, emits H

ComplexMatrix ket_bra(int i, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix exciton_hamiltonian(const DotParameters& p) {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(kGround, kGround) = p.level_energies[0] / constants::hbar_uev_ps;
  h(kLow, kLow) = p.level_energies[1] / constants::hbar_uev_ps;
  h(kHigh, kHigh) = p.level_energies[2] / constants::hbar_uev_ps;
  return h;
}

}  // namespace

void DotParameters::set_s_fss(double s) {
  s_fss = s;
  level_energies[2] = level_energies[1] + s;
}

void DotParameters::validate() const {
  auto reject = [](const std::string& what) { throw InvalidInput("DotParameters: " + what); };
  if (!std::isfinite(s_fss) || s_fss < 0.0) reject("s_fss must be finite and >= 0");
  for (double e : level_energies)
    if (!std::isfinite(e)) reject("level_energies must be finite");
  if (std::abs((level_energies[2] - level_energies[1]) - s_fss) > 1e-9)
    reject("level_energies[2] - level_energies[1] must equal s_fss");
  if (!std::isfinite(gamma_x) || gamma_x <= 0.0) reject("gamma_x must be > 0");
  if (!std::isfinite(gamma_dephase0) || gamma_dephase0 < 0.0) reject("gamma_dephase0 must be >= 0");
  if (!std::isfinite(gamma_phonon) || gamma_phonon < 0.0) reject("gamma_phonon must be >= 0");
  if (!std::isfinite(temperature) || temperature <= 0.0) reject("temperature must be > 0");
  if (!std::isfinite(g_noise) || g_noise < 0.0) reject("g_noise must be >= 0");
  if (!std::isfinite(gate_width) || gate_width < 0.0) reject("gate_width must be >= 0");
  if (eta_override) {
    const double e = *eta_override;
    if (!std::isfinite(e) || e < 0.0 || e > 1.0) reject("eta_override must be in [0, 1]");
  }
}

double phonon_occupation(double s_fss, double temperature) {
  if (!(s_fss > 0.0)) {
    throw InvalidInput("phonon_occupation diverges at s_fss = 0");
  }
  if (!(temperature > 0.0)) {
    throw InvalidInput("phonon_occupation requires temperature > 0");
  }
  // 1/expm1 stays accurate for small arguments and underflows cleanly
  // to 0 for large ones.
  return 1.0 / std::expm1(s_fss / (constants::kb_uev_per_k * temperature));
}

ExcitonChannels build_exciton_channels(const DotParameters& p) {
  p.validate();
  ExcitonChannels out;

  out.channels.emplace_back(ket_bra(kGround, kHigh), p.gamma_x);
  out.channels.emplace_back(ket_bra(kGround, kLow), p.gamma_x);

  if (p.gamma_phonon > 0.0) {
    if (p.s_fss > 0.0) {
      const double nbar = phonon_occupation(p.s_fss, p.temperature);
      const double coupling = p.gamma_phonon * std::pow(p.s_fss, 3);
      out.channels.emplace_back(ket_bra(kLow, kHigh), coupling * (nbar + 1.0));
      out.channels.emplace_back(ket_bra(kHigh, kLow), coupling * nbar);
      out.flip_rate_sum = coupling * (2.0 * nbar + 1.0);
    } else {
      out.flips_omitted = true;
    }
  }

  if (p.gamma_dephase0 > 0.0) {
    ComplexMatrix sz = ComplexMatrix::Zero(3, 3);
    sz(kHigh, kHigh) = 1.0;
    sz(kLow, kLow) = -1.0;
    out.channels.emplace_back(sz / std::sqrt(2.0), p.gamma_dephase0);
  }
  return out;
}

PairState::PairState(ComplexMatrix rho, bool normalized)
    : rho_(std::move(rho)), normalized_(normalized) {
  if (rho_.rows() != 4 || rho_.cols() != 4) {
    throw InvalidInput("PairState requires a 4x4 matrix");
  }
  require_finite(rho_, "pair state");
  if (hermiticity_defect(rho_) > tol::propagate_hermiticity) {
    throw NumericsError("pair state is not Hermitian");
  }
  if (normalized_ && std::abs(rho_.trace() - Complex(1.0, 0.0)) > tol::normalized_trace) {
    throw NumericsError("normalized pair state has trace != 1");
  }
  if (min_eigenvalue(rho_) < tol::positivity_floor * std::max(1.0, std::abs(rho_.trace()))) {
    throw NumericsError("pair state is not positive semidefinite");
  }
}

double PairState::zero_pattern_defect() const {
  static constexpr int kZeros[][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  double defect = 0.0;
  for (const auto& z : kZeros) {
    defect = std::max({defect, std::abs(rho_(z[0], z[1])),
                       std::abs(rho_(z[1], z[0]))});
  }
  return defect;
}

ComplexMatrix entangled_initial() {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = rho(3, 3) = rho(0, 3) = rho(3, 0) = 0.5;
  return rho;
}

double spectral_overlap(const DotParameters& p) {
  p.validate();
  if (p.eta_override) return *p.eta_override;
  if (p.s_fss == 0.0) return 1.0;
  const ExcitonChannels ch = build_exciton_channels(p);
  const double line = p.gamma_x + p.gamma_dephase0 + ch.flip_rate_sum;
  const double split = p.s_fss / constants::hbar_uev_ps;
  return line * line / (line * line + split * split);
}

PairDynamics::PairDynamics(const DotParameters& p) : params_(p) {
  params_.validate();
  ExcitonChannels ch = build_exciton_channels(params_);
  flips_omitted_ = ch.flips_omitted;
  eta_ = spectral_overlap(params_);

  // Full 9x9 exciton generator, then its restriction to the bright
  // sector {|2>, |1>}. Decay only leaves the sector, so the restriction
  // is exact; the lost trace is the coincidence weight.
  const Liouvillian lex = build_liouvillian(exciton_hamiltonian(params_), ch.channels);

  // Column-stacked coordinates of the bright 2x2 block, in slot order
  // {slot 0 = |2>, slot 1 = |1>}: slot entry (s, s') sits at exciton
  // coordinate (i, j) = (map[s], map[s']) -> i + 3 j.
  constexpr int map[2] = {kHigh, kLow};
  int coord[4];
  for (int ss = 0; ss < 2; ++ss)
    for (int s = 0; s < 2; ++s) coord[s + 2 * ss] = map[s] + 3 * map[ss];

  ComplexMatrix bright(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) bright(a, b) = lex.matrix(coord[a], coord[b]);

  // Lift to the 4x4 pair matrix: the first-photon index is a spectator,
  // so the 16x16 generator acts with `bright` on the second-photon slot
  // of every photon block.
  generator_ = ComplexMatrix::Zero(16, 16);
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2)
      for (int s = 0; s < 2; ++s)
        for (int ss = 0; ss < 2; ++ss) {
          const int row = (2 * p1 + s) + 4 * (2 * p2 + ss);
          for (int r = 0; r < 2; ++r)
            for (int rr = 0; rr < 2; ++rr) {
              const int col = (2 * p1 + r) + 4 * (2 * p2 + rr);
              generator_(row, col) = bright(s + 2 * ss, r + 2 * rr);
            }
        }
}

ComplexMatrix PairDynamics::pol_unnormalized(double tau) const {
  if (!(tau >= 0.0)) throw InvalidInput("pair delay tau must be >= 0");
  if (tau == 0.0) return entangled_initial();
  const Eigen::VectorXcd v = matrix_exp(generator_ * tau) * vectorize(entangled_initial());
  ComplexMatrix rho = unvectorize(v, 4);
  // The generator is exactly hermiticity-preserving; symmetrizing here
  // only removes last-bit asymmetry from the exponential.
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
  return rho;
}

ComplexMatrix PairDynamics::noc_unnormalized(double tau) const {
  ComplexMatrix rho = pol_unnormalized(tau);
  rho(0, 3) = 0.0;
  rho(3, 0) = 0.0;
  return rho;
}

double PairDynamics::coincidence_trace(double tau) const {
  return pol_unnormalized(tau).trace().real();
}

ComplexMatrix PairDynamics::mixture_unnormalized(double tau) const {
  const ComplexMatrix pol = pol_unnormalized(tau);
  ComplexMatrix noc = pol;
  noc(0, 3) = 0.0;
  noc(3, 0) = 0.0;
  const double w = pol.trace().real();
  ComplexMatrix mix = eta_ * pol + (1.0 - eta_) * noc;
  mix += (params_.g_noise * w / 4.0) * ComplexMatrix::Identity(4, 4);
  return mix;
}

namespace {

PairState checked_pair_state(ComplexMatrix rho, bool normalized) {
  PairState ps(std::move(rho), normalized);
  if (ps.zero_pattern_defect() > tol::algebra_identity) {
    throw NumericsError("cascade pair state violates the zero pattern");
  }
  return ps;
}

}  // namespace

PairState PairDynamics::pol(double tau) const {
  return checked_pair_state(pol_unnormalized(tau), false);
}

PairState PairDynamics::noc(double tau) const {
  return checked_pair_state(noc_unnormalized(tau), false);
}

PairState PairDynamics::total(double tau) const {
  ComplexMatrix mix = mixture_unnormalized(tau);
  const double norm = mix.trace().real();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    std::ostringstream os;
    os << "pair mixture trace vanished at tau = " << tau;
    throw DegenerateInput(os.str());
  }
  return checked_pair_state(mix / norm, true);
}

PairState pair_density_pol(const DotParameters& p, double tau) {
  return PairDynamics(p).pol(tau);
}

PairState pair_density_noc(const DotParameters& p, double tau) {
  return PairDynamics(p).noc(tau);
}

PairState pair_density_total(const DotParameters& p, double tau) {
  return PairDynamics(p).total(tau);
}

}  // namespace lgdot
