#pragma once

#include <string>
#include <vector>

#include "hftlab/sampled.hpp"

namespace hftlab {

/// Free particle on the real line: H_f = P^2 / 2m.
struct FreeParticleConfig {
  double mass = 1.0;
  double hbar = 1.0;
  double momentum = 0.0;

  void validate() const;
};

/// exp(-i E t' / hbar) on an energy grid: eigenfunction of Z = i hbar d/dE with eigenvalue t'.
SampledHalfLineFunction time_eigenfunction(double t_prime, const QuadratureGrid& energy_grid, double hbar = 1.0);

/// ||Z f - t' f|| / ||f|| for a time eigenfunction.
double time_eigen_residual(const SampledHalfLineFunction& f, double t_prime);

/// Gaussian stand-in for delta(E - E'): (2 pi sigma^2)^(-1/2) exp(-(E - E')^2 / (2 sigma^2)),
/// rescaled so that its quadrature mass sum_i w_i f_i is exactly 1.
/// Requires E' - 4 sigma > 0.
SampledHalfLineFunction smeared_energy_eigenfunction(double e_prime, double sigma, const QuadratureGrid& grid,
                                                     double hbar = 1.0);

/// Default energy grid for a smeared eigenfunction: (0, E' + 12 sigma + 1] with
/// panels no wider than sigma / 2.
QuadratureGrid default_energy_grid(double e_prime, double sigma);

struct TimeRepresentation {
  HardyLineSample sample;
  std::vector<double> unwrapped_phase;
  /// Least-squares slope of the unwrapped phase against t.
  double phase_slope = 0.0;
  /// max_t |arg phi(t) - arg phi(t_0) - E' (t - t_0) / hbar|
  double phase_error = 0.0;
  /// E' = 0: the delta sits on the spectrum edge and the exact constant limit is returned.
  bool limit_case = false;
};

/// HFT of the smeared eigenfunction along Im z = y (the time axis as y -> 0+).
TimeRepresentation time_representation(double e_prime, double sigma, const std::vector<double>& t_nodes,
                                       double y_line = 1e-3, double hbar = 1.0);

/// ||sign * i hbar dphi/dt - E' phi|| / ||phi|| for phi = exp(i E' t / hbar) on uniform t nodes,
/// using the fourth-order stencil on interior nodes. sign = -1 is the energy eigenvalue
/// equation; sign = +1 is the wrong-sign check.
double schrodinger_residual(double e_prime, const std::vector<double>& t_nodes, double hbar = 1.0,
                            int sign = -1);

struct PlaneWave {
  double momentum;
  std::string formula;  // coordinate-representation eigenfunction
};

struct FreeParticleMap {
  double energy = 0.0;
  std::vector<PlaneWave> eigenfunctions;  // u_{+p}, u_{-p}; one entry when p = 0
  /// Positive times come from T_sqrt, negative times from the inversion-transformed operator.
  std::string positive_time_branch;
  std::string negative_time_branch;
};

FreeParticleMap free_particle_map(const FreeParticleConfig& cfg);

}  // namespace hftlab
