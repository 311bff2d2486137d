#include "lgdot/densmat.hpp"

#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace lgdot {

void require_finite(const ComplexMatrix& m, const char* name) {
  if (!m.allFinite()) {
    std::ostringstream os;
    os << name << " contains a non-finite entry";
    throw InvalidInput(os.str());
  }
}

namespace {

void require_square(const ComplexMatrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << name << " must be square, got " << m.rows() << "x" << m.cols();
    throw InvalidInput(os.str());
  }
}

void require_dim(const ComplexMatrix& m, Eigen::Index n, const char* name) {
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << name << " has dimension " << m.rows() << "x" << m.cols()
       << ", expected " << n << "x" << n;
    throw InvalidInput(os.str());
  }
}

}  // namespace

LindbladChannel::LindbladChannel(ComplexMatrix collapse, double rate)
    : collapse_(std::move(collapse)), rate_(rate) {
  require_square(collapse_, "collapse operator");
  require_finite(collapse_, "collapse operator");
  if (!(rate_ >= 0.0)) {
    std::ostringstream os;
    os << "channel rate must be >= 0, got " << rate_;
    throw InvalidInput(os.str());
  }
}

Eigen::VectorXcd vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

ComplexMatrix unvectorize(const Eigen::VectorXcd& v, Eigen::Index n) {
  if (v.size() != n * n) throw InvalidInput("vector length does not match dimension");
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  require_square(m, "matrix_exp argument");
  require_finite(m, "matrix_exp argument");
  return m.exp();
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h0,
                           const std::vector<LindbladChannel>& channels) {
  require_square(rho, "rho");
  require_finite(rho, "rho");
  require_square(h0, "h0");
  require_finite(h0, "h0");
  const Eigen::Index n = rho.rows();
  require_dim(h0, n, "h0");

  const Complex i_unit(0.0, 1.0);
  ComplexMatrix out = -i_unit * (h0 * rho - rho * h0);
  for (const auto& ch : channels) {
    require_dim(ch.collapse(), n, "channel collapse operator");
    const ComplexMatrix& c = ch.collapse();
    const ComplexMatrix cd = c.adjoint();
    const ComplexMatrix cdc = cd * c;
    out.noalias() += ch.rate() * (c * rho * cd);
    out.noalias() -= (0.5 * ch.rate()) * (cdc * rho + rho * cdc);
  }
  return out;
}

Liouvillian build_liouvillian(const ComplexMatrix& h0,
                              const std::vector<LindbladChannel>& channels) {
  require_square(h0, "h0");
  require_finite(h0, "h0");
  const Eigen::Index n = h0.rows();
  for (const auto& ch : channels) require_dim(ch.collapse(), n, "channel collapse operator");

  Liouvillian gen;
  gen.dim = n;
  gen.matrix = ComplexMatrix::Zero(n * n, n * n);
  ComplexMatrix basis = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n * n; ++j) {
    basis(j % n, j / n) = 1.0;
    gen.matrix.col(j) = vectorize(lindblad_rhs(basis, h0, channels));
    basis(j % n, j / n) = 0.0;
  }

  // Trace functional must be a left null vector of the generator.
  const Eigen::VectorXcd tr_functional = vectorize(ComplexMatrix::Identity(n, n));
  const double defect = (tr_functional.adjoint() * gen.matrix).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, gen.matrix.cwiseAbs().maxCoeff());
  if (defect > tol::algebra_identity * scale) {
    throw NumericsError("liouvillian does not preserve trace");
  }
  return gen;
}

ComplexMatrix propagate(const ComplexMatrix& rho0, const Liouvillian& gen,
                        double t) {
  if (!(t >= 0.0)) throw InvalidInput("propagation time must be >= 0");
  require_dim(rho0, gen.dim, "rho0");
  require_finite(rho0, "rho0");
  if (!is_valid_density_matrix(rho0)) {
    throw InvalidInput("rho0 is not a valid density matrix");
  }
  if (t == 0.0) return rho0;

  const ComplexMatrix u = matrix_exp(gen.matrix * t);
  ComplexMatrix rho = unvectorize(u * vectorize(rho0), gen.dim);

  if (std::abs(trace(rho) - Complex(1.0, 0.0)) > tol::propagate_trace) {
    throw NumericsError("propagate lost trace beyond tolerance");
  }
  if (hermiticity_defect(rho) > tol::propagate_hermiticity) {
    throw NumericsError("propagate broke hermiticity beyond tolerance");
  }
  if (min_eigenvalue(rho) < tol::positivity_floor) {
    throw NumericsError("propagate broke positivity beyond tolerance");
  }
  return rho;
}

Complex trace(const ComplexMatrix& m) {
  require_square(m, "trace argument");
  return m.trace();
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect argument");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& m) {
  require_square(m, "min_eigenvalue argument");
  require_finite(m, "min_eigenvalue argument");
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericsError("hermitian eigensolver failed to converge");
  }
  return solver.eigenvalues().minCoeff();
}

bool is_valid_density_matrix(const ComplexMatrix& rho, double tolerance) {
  if (rho.rows() != rho.cols() || !rho.allFinite()) return false;
  if (hermiticity_defect(rho) > tolerance) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tolerance) return false;
  return min_eigenvalue(rho) >= -tolerance;
}

}  // namespace lgdot
