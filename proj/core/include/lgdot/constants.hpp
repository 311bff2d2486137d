#pragma once

// Unit conventions used throughout: time in ps, energies in ueV,
// rates in 1/ps, temperatures in K. Hamiltonians are passed in
// angular-frequency units (energy / hbar, i.e. 1/ps).

namespace lgdot::constants {

inline constexpr double hbar_uev_ps = 658.2119569;  // ueV * ps
inline constexpr double kb_uev_per_k = 86.17333;    // ueV / K

}  // namespace lgdot::constants

namespace lgdot::tol {

// Every numeric tolerance used by the library, in one place.

// Input validity of a density matrix handed to propagate().
inline constexpr double density_input = 1e-9;

// Postconditions of propagate(): trace drift, hermiticity defect, and
// the most negative eigenvalue tolerated on the evolved state.
inline constexpr double propagate_trace = 1e-10;
inline constexpr double propagate_hermiticity = 1e-10;
inline constexpr double positivity_floor = -1e-9;

// Algebraic identities (generator consistency, correlator route
// equality, pair-state zero pattern).
inline constexpr double algebra_identity = 1e-12;

// Trace of a normalized pair state.
inline constexpr double normalized_trace = 1e-10;

// Hermitian eigensolver accuracy assumed by min_eigenvalue().
inline constexpr double eigen_solver = 1e-10;

// Relative tolerance of the timing-gate quadrature.
inline constexpr double quadrature_rel = 1e-8;

// Below this trace (or conditioning denominator) a state is treated as
// degenerate rather than renormalized.
inline constexpr double degenerate_trace = 1e-15;

// A Leggett-Garg quantity counts as violating only below
// -1 - violation_margin, so the classical boundary itself never
// triggers a crossing.
inline constexpr double violation_margin = 1e-12;

// Slack allowed on |K| <= 1 for gate-averaged correlators: the exact
// value is bounded by 1, so only quadrature error (quadrature_rel of the
// coincidence scale) can exceed it.
inline constexpr double correlator_range = 5e-8;

}  // namespace lgdot::tol
