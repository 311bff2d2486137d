#include <doctest.h>

#include <numbers>

#include "lgdot/densmat.hpp"
#include "lgdot/oracle.hpp"
#include "test_support.hpp"

using namespace lgdot;

namespace {

ComplexMatrix sigma_z_over_sqrt2() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 / std::sqrt(2.0);
  m(1, 1) = -1.0 / std::sqrt(2.0);
  return m;
}

}  // namespace

TEST_CASE("lindblad_rhs: identity with diagonal h0 and no channels is stationary") {
  const ComplexMatrix rho = 0.25 * ComplexMatrix::Identity(4, 4);
  ComplexMatrix h0 = ComplexMatrix::Zero(4, 4);
  h0.diagonal() << 0.0, 1.0, 2.0, 3.0;
  const ComplexMatrix rhs = lindblad_rhs(rho, h0, {});
  CHECK(rhs.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lindblad_rhs: coherence rotates at the splitting frequency") {
  const double s = 3.0 / constants::hbar_uev_ps;
  ComplexMatrix h0 = ComplexMatrix::Zero(2, 2);
  h0(1, 1) = s;
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = rho(1, 1) = 0.5;
  rho(0, 1) = rho(1, 0) = 0.5;
  const ComplexMatrix rhs = lindblad_rhs(rho, h0, {});
  CHECK(std::abs(rhs(0, 1) - Complex(0.0, 0.5 * s)) < 1e-15);
  CHECK(std::abs(rhs(1, 0) - Complex(0.0, -0.5 * s)) < 1e-15);
}

TEST_CASE("lindblad_rhs: pure dephasing decays the coherence at gamma_d") {
  const double gamma_d = 0.1;
  std::vector<LindbladChannel> channels;
  channels.emplace_back(sigma_z_over_sqrt2(), gamma_d);
  ComplexMatrix rho(2, 2);
  rho << 0.5, 0.5, 0.5, 0.5;
  const ComplexMatrix h0 = ComplexMatrix::Zero(2, 2);
  const ComplexMatrix rhs = lindblad_rhs(rho, h0, channels);

  ComplexMatrix expected(2, 2);
  expected << 0.0, -gamma_d / 2.0, -gamma_d / 2.0, 0.0;
  CHECK((rhs - expected).cwiseAbs().maxCoeff() < 1e-15);

  // The fine-step integrator confirms the decay law the rhs implies.
  const ComplexMatrix evolved =
      oracle::rk4_reference(rho, h0, channels, 10.0, 10000);
  CHECK(std::abs(evolved(0, 1).real() - 0.5 * std::exp(-gamma_d * 10.0)) < 1e-9);
}

TEST_CASE("lindblad_rhs traces to zero and rejects bad input") {
  std::mt19937_64 rng(7);
  const ComplexMatrix rho = testing::random_density(rng, 4);
  const ComplexMatrix h0 = testing::random_hermitian(rng, 4, 0.02);
  const auto channels = testing::random_channels(rng, 4, 3, 0.01);
  CHECK(std::abs(lindblad_rhs(rho, h0, channels).trace()) < 1e-15);

  const ComplexMatrix h_bad = testing::random_hermitian(rng, 3, 0.02);
  CHECK_THROWS_AS(lindblad_rhs(rho, h_bad, channels), InvalidInput);
  CHECK_THROWS_AS(LindbladChannel(ComplexMatrix::Identity(2, 2), -0.1), InvalidInput);
  ComplexMatrix nan_matrix = ComplexMatrix::Zero(2, 2);
  nan_matrix(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(lindblad_rhs(nan_matrix, ComplexMatrix::Zero(2, 2), {}), InvalidInput);
}

TEST_CASE("build_liouvillian: zero generator without drive or channels") {
  const Liouvillian gen = build_liouvillian(ComplexMatrix::Zero(3, 3), {});
  CHECK(gen.dim == 3);
  CHECK(gen.matrix.rows() == 9);
  CHECK(gen.matrix.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_liouvillian matches lindblad_rhs on random states") {
  std::mt19937_64 rng(11);
  const ComplexMatrix h0 = testing::random_hermitian(rng, 4, 0.05);
  const auto channels = testing::random_channels(rng, 4, 3, 0.02);
  const Liouvillian gen = build_liouvillian(h0, channels);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix rho = testing::random_hermitian(rng, 4, 1.0);
    const ComplexMatrix via_gen = unvectorize(gen.matrix * vectorize(rho), 4);
    worst = std::max(worst,
                     (via_gen - lindblad_rhs(rho, h0, channels)).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("trace functional is a left null vector of the generator") {
  std::mt19937_64 rng(37);
  const Liouvillian gen = build_liouvillian(
      testing::random_hermitian(rng, 4, 0.05), testing::random_channels(rng, 4, 3, 0.02));
  const Eigen::VectorXcd tr = vectorize(ComplexMatrix::Identity(4, 4));
  CHECK((tr.adjoint() * gen.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("build_liouvillian is bit-deterministic") {
  std::mt19937_64 rng(13);
  const ComplexMatrix h0 = testing::random_hermitian(rng, 4, 0.05);
  const auto channels = testing::random_channels(rng, 4, 2, 0.02);
  const Liouvillian a = build_liouvillian(h0, channels);
  const Liouvillian b = build_liouvillian(h0, channels);
  CHECK(a.matrix == b.matrix);
}

TEST_CASE("dephasing liouvillian has eigenvalues 0 and -gamma_d") {
  const double gamma_d = 0.25;
  std::vector<LindbladChannel> channels;
  channels.emplace_back(sigma_z_over_sqrt2(), gamma_d);
  const Liouvillian gen = build_liouvillian(ComplexMatrix::Zero(2, 2), channels);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(gen.matrix);
  bool has_zero = false, has_gamma = false;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const Complex ev = solver.eigenvalues()(i);
    if (std::abs(ev) < 1e-10) has_zero = true;
    if (std::abs(ev - Complex(-gamma_d, 0.0)) < 1e-10) has_gamma = true;
  }
  CHECK(has_zero);
  CHECK(has_gamma);
}

TEST_CASE("propagate: t = 0 returns the input exactly") {
  std::mt19937_64 rng(17);
  const ComplexMatrix rho = testing::random_density(rng, 4);
  const Liouvillian gen = build_liouvillian(
      testing::random_hermitian(rng, 4, 0.02), testing::random_channels(rng, 4, 2, 0.01));
  CHECK(propagate(rho, gen, 0.0) == rho);
}

TEST_CASE("propagate: dephasing plus splitting has a closed form") {
  const double gamma_d = 2e-3;
  const double s = 3.0 / constants::hbar_uev_ps;
  ComplexMatrix h0 = ComplexMatrix::Zero(2, 2);
  h0(1, 1) = s;
  std::vector<LindbladChannel> channels;
  channels.emplace_back(sigma_z_over_sqrt2(), gamma_d);
  const Liouvillian gen = build_liouvillian(h0, channels);

  ComplexMatrix rho0(2, 2);
  rho0 << 0.5, 0.5, 0.5, 0.5;
  for (double t : {50.0, 400.0, 2000.0}) {
    const ComplexMatrix rho = propagate(rho0, gen, t);
    // Coherence rho01 evolves against the (0,1) phase convention:
    // exp(-gamma_d t) * exp(+i s t) / 2.
    const Complex expected =
        0.5 * std::exp(-gamma_d * t) * std::exp(Complex(0.0, s * t));
    CHECK(std::abs(rho(0, 1) - expected) < 1e-9);
    CHECK(std::abs(rho(0, 0) - Complex(0.5, 0.0)) < 1e-10);
  }
}

TEST_CASE("propagate agrees with the RK4 reference") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const ComplexMatrix h0 = testing::random_hermitian(rng, 4, 0.01);
    const auto channels = testing::random_channels(rng, 4, 3, 0.005);
    const ComplexMatrix rho0 = testing::random_density(rng, 4);
    const Liouvillian gen = build_liouvillian(h0, channels);
    const double t = 200.0 + 4800.0 * u01(rng);
    const long steps = std::max<long>(1000, static_cast<long>(t));
    const ComplexMatrix diff =
        propagate(rho0, gen, t) - oracle::rk4_reference(rho0, h0, channels, t, steps);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("propagate preserves density-matrix validity and the semigroup law") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Liouvillian gen = build_liouvillian(
        testing::random_hermitian(rng, 4, 0.02), testing::random_channels(rng, 4, 3, 0.01));
    const ComplexMatrix rho0 = testing::random_density(rng, 4);
    const double t1 = 5000.0 * u01(rng);
    const double t2 = 5000.0 * u01(rng) * 0.2;

    const ComplexMatrix rho1 = propagate(rho0, gen, t1);
    CHECK(std::abs(rho1.trace() - Complex(1.0, 0.0)) < 1e-9);
    CHECK(hermiticity_defect(rho1) < 1e-10);
    CHECK(min_eigenvalue(rho1) >= -1e-9);

    const ComplexMatrix joint = propagate(rho0, gen, t1 + t2);
    const ComplexMatrix stepped = propagate(rho1, gen, t2);
    CHECK((joint - stepped).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("propagate rejects invalid input") {
  std::mt19937_64 rng(29);
  const Liouvillian gen = build_liouvillian(testing::random_hermitian(rng, 2, 0.01), {});
  const ComplexMatrix rho = testing::random_density(rng, 2);
  CHECK_THROWS_AS(propagate(rho, gen, -1.0), InvalidInput);

  ComplexMatrix not_density = ComplexMatrix::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(propagate(not_density, gen, 1.0), InvalidInput);

  ComplexMatrix negative(2, 2);
  negative << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(propagate(negative, gen, 1.0), InvalidInput);
}

TEST_CASE("trace, hermiticity_defect and min_eigenvalue basics") {
  CHECK(trace(ComplexMatrix::Identity(4, 4)) == Complex(4.0, 0.0));

  std::mt19937_64 rng(31);
  const ComplexMatrix h = testing::random_hermitian(rng, 3, 1.0);
  CHECK(hermiticity_defect(h) == 0.0);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.1;
  d(1, 1) = 0.9;
  CHECK(min_eigenvalue(d) == doctest::Approx(0.1).epsilon(1e-12));
}
