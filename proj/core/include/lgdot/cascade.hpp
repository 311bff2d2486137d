#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lgdot/densmat.hpp"

// Physics of the biexciton cascade. After the first photon is emitted the
// dot is in the entangled photon-exciton state (|H>|2> + |V>|1>)/sqrt(2);
// the exciton pair {|2>, |1>} is split by the fine structure S and decays
// radiatively to the ground state, emitting the second photon. The
// conditional two-photon polarization state lives in the ordered basis
// {|H1 H2>, |H1 V2>, |V1 H2>, |V1 V2>} with H2 tracking |2> and V2
// tracking |1>.

namespace lgdot {

// Full physical configuration of one simulation.
struct DotParameters {
  double s_fss = 3.0;  // fine-structure splitting between |2> and |1>, ueV

  // Level energies hbar*omega_i of |0>,|1>,|2>,|3> in ueV. Only the
  // difference [2]-[1] (= s_fss, enforced by validate()) enters any
  // observable; the others are carried for completeness.
  std::array<double, 4> level_energies{0.0, 0.0, 3.0, 0.0};

  double gamma_x = 0.012;        // exciton radiative decay, 1/ps (both paths)
  double gamma_dephase0 = 1e-5;  // zero-temperature pure dephasing, 1/ps
  double gamma_phonon = 1e-7;    // phonon coupling scale, 1/ps at S = 1 ueV;
                                 // flip rates carry an (S/1 ueV)^3 factor
  double temperature = 5.0;      // bath temperature, K
  double g_noise = 0.0;          // background-noise weight g
  double gate_width = 50.0;      // timing-gate width omega, ps

  // When present, used directly as the spectral-overlap weight eta
  // instead of the Lorentzian model in spectral_overlap().
  std::optional<double> eta_override;

  // Sets s_fss and shifts level_energies[2] to keep them consistent.
  void set_s_fss(double s);

  void validate() const;  // throws InvalidInput

  bool operator==(const DotParameters&) const = default;
};

// Bose occupation of the phonon mode bridging the splitting:
// nbar = 1 / (exp(S / (kB T)) - 1). Rejects s_fss == 0 (divergent).
double phonon_occupation(double s_fss, double temperature);

// Dissipation channels on the exciton triple {ground, |1>, |2>}.
// Families: (a,b) radiative decay of each bright state at gamma_x,
// (c) thermal flips |2> -> |1> at gamma_phonon (S/ueV)^3 (nbar+1) and
// |1> -> |2> at gamma_phonon (S/ueV)^3 nbar, (d) pure sigma_z dephasing
// between the bright states at gamma_dephase0. At s_fss == 0 the flip
// rates are omitted (nbar diverges) and flips_omitted is set.
struct ExcitonChannels {
  std::vector<LindbladChannel> channels;
  double flip_rate_sum = 0.0;  // down + up, the phonon linewidth share
  bool flips_omitted = false;
};
ExcitonChannels build_exciton_channels(const DotParameters& p);

// Two-photon polarization density matrix. Construction checks
// hermiticity, positivity and (when flagged) unit trace. Cascade-produced
// states additionally honor the zero pattern where only the diagonal and
// the (1,4)/(4,1) coherence are nonzero; zero_pattern_defect() measures
// it, and the cascade factories reject any violation.
class PairState {
 public:
  PairState(ComplexMatrix rho, bool normalized);

  const ComplexMatrix& rho() const { return rho_; }
  bool normalized() const { return normalized_; }
  Complex entry(int i, int j) const { return rho_(i, j); }

  // Largest magnitude among the entries the cascade keeps at zero:
  // (1,2), (1,3), (2,3), (2,4), (3,4) and conjugates (1-based).
  double zero_pattern_defect() const;

 private:
  ComplexMatrix rho_;
  bool normalized_;
};

// |psi><psi| for |psi> = (|H>|2> + |V>|1>)/sqrt(2) in the ordered basis
// {H|2>, H|1>, V|2>, V|1>}: 1/2 at (0,0), (3,3), (0,3), (3,0).
ComplexMatrix entangled_initial();

// Spectral overlap eta of the two emission lines. Returns eta_override
// when present, otherwise the Lorentzian overlap
//   eta = Gc^2 / (Gc^2 + (S/hbar)^2)
// with Gc = gamma_x + gamma_dephase0 + (flip-rate sum), the total
// coherence linewidth of the built channel set.
double spectral_overlap(const DotParameters& p);

// Conditional pair state after delay tau: the coherent component
// rho_pol (unnormalized; its trace is the surviving coincidence weight),
// the which-path component rho_noc (same diagonal, coherence erased),
// and the normalized three-part mixture
//   rho_tot = [eta rho_pol + (1-eta) rho_noc + g w(tau) I/4] / N
// where w(tau) matches the coincidence trace so the noise fraction of
// the normalized state is g/(1+g) at every tau.
PairState pair_density_pol(const DotParameters& p, double tau);
PairState pair_density_noc(const DotParameters& p, double tau);
PairState pair_density_total(const DotParameters& p, double tau);

// Cached engine behind the free functions above. Builds the pair-sector
// generator once; repeated delays cost one 16x16 matrix exponential each.
class PairDynamics {
 public:
  explicit PairDynamics(const DotParameters& p);

  const DotParameters& params() const { return params_; }
  double eta() const { return eta_; }
  bool flips_omitted() const { return flips_omitted_; }

  // 16x16 generator of the column-stacked 4x4 pair matrix: the exciton
  // Liouvillian restricted to the bright sector (exact, since nothing
  // feeds back from the ground state), acting blockwise under the
  // spectator photon index.
  const ComplexMatrix& pair_generator() const { return generator_; }

  ComplexMatrix pol_unnormalized(double tau) const;
  ComplexMatrix noc_unnormalized(double tau) const;
  ComplexMatrix mixture_unnormalized(double tau) const;
  double coincidence_trace(double tau) const;

  PairState pol(double tau) const;
  PairState noc(double tau) const;
  PairState total(double tau) const;

 private:
  DotParameters params_;
  double eta_;
  bool flips_omitted_;
  ComplexMatrix generator_;  // 16x16
};

}  // namespace lgdot
