#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lgdot/constants.hpp"
#include "lgdot/errors.hpp"

namespace lgdot {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Throws InvalidInput if m contains NaN or Inf.
void require_finite(const ComplexMatrix& m, const char* name);

// One dissipation channel: collapse operator C and rate r, contributing
// r * (C rho C^dag - 1/2 {C^dag C, rho}) to the master equation.
class LindbladChannel {
 public:
  LindbladChannel(ComplexMatrix collapse, double rate);

  const ComplexMatrix& collapse() const { return collapse_; }
  double rate() const { return rate_; }
  Eigen::Index dim() const { return collapse_.rows(); }

 private:
  ComplexMatrix collapse_;
  double rate_;
};

// Vectorized generator: an n^2 x n^2 matrix acting on column-stacked
// density matrices. Built by build_liouvillian(), which checks that the
// trace functional is a left null vector (the generator preserves trace).
struct Liouvillian {
  Eigen::Index dim = 0;
  ComplexMatrix matrix;  // n^2 x n^2, units 1/ps
};

// Column stacking and its inverse (Eigen-native column-major order).
Eigen::VectorXcd vectorize(const ComplexMatrix& m);
ComplexMatrix unvectorize(const Eigen::VectorXcd& v, Eigen::Index n);

// Dense matrix exponential. Scaling-and-squaring with Pade approximants
// (Eigen's MatrixFunctions implementation); this is the one exponential
// used everywhere in the library.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

// Right-hand side of the master equation
//   d rho / dt = -i [h0, rho] + sum_k r_k (C_k rho C_k^dag - 1/2 {C_k^dag C_k, rho})
// with h0 in angular-frequency units (1/ps).
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h0,
                           const std::vector<LindbladChannel>& channels);

// Assembles the vectorized generator column by column from lindblad_rhs.
// Deterministic: identical inputs give bit-identical output.
Liouvillian build_liouvillian(const ComplexMatrix& h0,
                              const std::vector<LindbladChannel>& channels);

// Evolves a valid density matrix for time t >= 0 via exp(gen.matrix * t).
// Verifies on exit that the result is Hermitian to tol::propagate_hermiticity,
// has trace within tol::propagate_trace of 1, and minimum eigenvalue
// >= tol::positivity_floor.
ComplexMatrix propagate(const ComplexMatrix& rho0, const Liouvillian& gen,
                        double t);

Complex trace(const ComplexMatrix& m);

// max_ij |m - m^dag|
double hermiticity_defect(const ComplexMatrix& m);

// Smallest eigenvalue of the Hermitian part (m + m^dag)/2, via a
// self-adjoint eigensolver accurate to tol::eigen_solver.
double min_eigenvalue(const ComplexMatrix& m);

// True when rho is Hermitian, unit-trace and positive semidefinite,
// all within the given tolerance.
bool is_valid_density_matrix(const ComplexMatrix& rho,
                             double tolerance = tol::density_input);

}  // namespace lgdot
