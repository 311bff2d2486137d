#pragma once

#include <random>

#include "lgdot/densmat.hpp"

// Shared generators for randomized tests. Fixed seeds keep every run
// reproducible.

namespace lgdot::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index n,
                                      double scale) {
  ComplexMatrix m = random_matrix(rng, n);
  m = 0.5 * (m + ComplexMatrix(m.adjoint()));
  const double top = m.cwiseAbs().maxCoeff();
  if (top > 0.0) m *= scale / top;
  return m;
}

inline ComplexMatrix random_density(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrix a = random_matrix(rng, n);
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

inline std::vector<LindbladChannel> random_channels(std::mt19937_64& rng,
                                                    Eigen::Index n, int count,
                                                    double rate_scale) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<LindbladChannel> out;
  for (int k = 0; k < count; ++k) {
    ComplexMatrix c = random_matrix(rng, n);
    c /= c.cwiseAbs().maxCoeff();
    out.emplace_back(std::move(c), rate_scale * u01(rng));
  }
  return out;
}

}  // namespace lgdot::testing
