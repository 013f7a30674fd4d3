#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hftlab/errors.hpp"
#include "hftlab/physics.hpp"

using namespace hftlab;

namespace {
const double pi = std::numbers::pi;
}

TEST(TimeEigenfunction, Values) {
  const auto g = QuadratureGrid::truncated_uniform(2 * pi, 8, 16);
  const auto f0 = time_eigenfunction(0.0, g);
  for (const auto& v : f0.values()) EXPECT_EQ(v, complex(1.0));
  const auto f1 = time_eigenfunction(1.0, g);
  for (std::size_t i = 0; i < g.size(); i += 11)
    EXPECT_LT(std::abs(f1.values()[i] - std::polar(1.0, -g.nodes()[i])), 1e-15);
}

TEST(TimeEigenfunction, ZEigenvalue) {
  const auto g = QuadratureGrid::truncated_uniform(20.0, 80, 16);
  for (double t : {0.5, 1.0, 2.0}) EXPECT_LT(time_eigen_residual(time_eigenfunction(t, g), t), 1e-6) << t;
}

TEST(SmearedEigenfunction, UnitMassAndDeltaLimit) {
  const double e_prime = 2.0;
  // Overlap with g(E) = E^2 equals E'^2 + sigma^2 for a Gaussian of unit mass.
  double prev_err = 0.0;
  for (double sigma : {0.2, 0.1, 0.05}) {
    const auto grid = default_energy_grid(e_prime, sigma);
    const auto f = smeared_energy_eigenfunction(e_prime, sigma, grid);
    EXPECT_NEAR(grid.integrate(f.values()).real(), 1.0, 1e-10);
    std::vector<complex> prod;
    for (std::size_t i = 0; i < grid.size(); ++i) prod.push_back(f.values()[i] * grid.nodes()[i] * grid.nodes()[i]);
    const double err = std::abs(grid.integrate(prod).real() - e_prime * e_prime);
    EXPECT_NEAR(err, sigma * sigma, 1e-8);
    if (prev_err > 0.0) EXPECT_NEAR(prev_err / err, 4.0, 1e-3);
    prev_err = err;
  }
}

TEST(SmearedEigenfunction, LinearOverlapExact) {
  const auto grid = default_energy_grid(2.0, 0.1);
  const auto f = smeared_energy_eigenfunction(2.0, 0.1, grid);
  std::vector<complex> prod;
  for (std::size_t i = 0; i < grid.size(); ++i) prod.push_back(f.values()[i] * grid.nodes()[i]);
  EXPECT_NEAR(grid.integrate(prod).real(), 2.0, 1e-10);
}

TEST(SmearedEigenfunction, Preconditions) {
  const auto grid = default_energy_grid(1.0, 0.1);
  EXPECT_THROW(smeared_energy_eigenfunction(0.3, 0.1, grid), PreconditionError);
  EXPECT_THROW(smeared_energy_eigenfunction(1.0, 0.0, grid), InputError);
}

TEST(TimeRepresentation, PhaseSlopeIsEnergy) {
  const auto t = uniform_nodes(-5.0, 5.0, 1001);
  for (double e : {1.0, 2.5}) {
    const auto r = time_representation(e, 0.05, t);
    EXPECT_NEAR(r.phase_slope, e, 1e-2);
    EXPECT_FALSE(r.limit_case);
  }
}

TEST(TimeRepresentation, PhaseErrorFallsWithSigma) {
  const auto t = uniform_nodes(-5.0, 5.0, 1001);
  double prev = 1e300;
  for (double sigma : {0.2, 0.1, 0.05}) {
    const auto r = time_representation(1.0, sigma, t);
    EXPECT_LT(r.phase_error, prev) << sigma;
    prev = r.phase_error;
  }
}

TEST(TimeRepresentation, ZeroEnergyIsFlat) {
  const auto r = time_representation(0.0, 0.05, uniform_nodes(-5.0, 5.0, 101));
  EXPECT_TRUE(r.limit_case);
  EXPECT_EQ(r.phase_slope, 0.0);
  EXPECT_EQ(r.phase_error, 0.0);
}

TEST(Schrodinger, ResidualOnExactEigenfunction) {
  const auto t = uniform_nodes(-5.0, 5.0, 1001);
  EXPECT_LT(schrodinger_residual(1.0, t), 1e-8);
  EXPECT_EQ(schrodinger_residual(0.0, t), 0.0);
}

TEST(Schrodinger, WrongSignGivesTwiceEnergy) {
  const auto t = uniform_nodes(-5.0, 5.0, 1001);
  for (double e : {0.5, 1.0, 3.0}) EXPECT_NEAR(schrodinger_residual(e, t, 1.0, +1), 2.0 * e, 1e-6 * e + 1e-6);
}

TEST(Schrodinger, InputChecks) {
  EXPECT_THROW(schrodinger_residual(1.0, {0.0, 1.0, 2.0}), InputError);
  EXPECT_THROW(schrodinger_residual(1.0, {0.0, 1.0, 2.0, 4.0, 5.0, 6.0}), InputError);
  EXPECT_THROW(schrodinger_residual(1.0, uniform_nodes(0, 1, 11), 1.0, 0), InputError);
}

TEST(FreeParticle, EnergyAndDegeneracy) {
  const auto m = free_particle_map({1.0, 1.0, 2.0});
  EXPECT_EQ(m.energy, 2.0);
  EXPECT_EQ(m.eigenfunctions.size(), 2u);
  for (double p : {0.3, 1.7, 12.0}) EXPECT_EQ(free_particle_map({2.5, 1.0, p}).energy, free_particle_map({2.5, 1.0, -p}).energy);
  const auto rest = free_particle_map({1.0, 1.0, 0.0});
  EXPECT_EQ(rest.energy, 0.0);
  EXPECT_EQ(rest.eigenfunctions.size(), 1u);
  EXPECT_THROW(free_particle_map({0.0, 1.0, 1.0}), InputError);
}
