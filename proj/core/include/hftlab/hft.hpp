#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hftlab/sampled.hpp"

namespace hftlab {

/// Forward value plus diagnostics about the quadrature.
struct ForwardEstimate {
  complex value;
  /// Bound on the mass beyond the last grid node, assuming |f| does not grow there.
  double tail_bound = 0.0;
  /// False when exp(i s x / hbar) oscillates faster than the grid resolves.
  bool resolved = true;
};

/// phi(z) = (2 pi hbar)^(-1/2) sum_i w_i f(s_i) exp(i s_i z / hbar).
complex forward_hft(const SampledHalfLineFunction& f, const HalfPlanePoint& z);
ForwardEstimate forward_hft_estimate(const SampledHalfLineFunction& f, const HalfPlanePoint& z);

/// Forward transform on the line Im z = y at each of `x_nodes`.
HardyLineSample sample_line(const SampledHalfLineFunction& f, double y,
                            const std::vector<double>& x_nodes);

/// Default x window for inverse transforms: [-40 hbar, 40 hbar], spacing 0.04 hbar.
std::vector<double> default_line_nodes(double hbar = 1.0);

/// Default reconstruction grid for a line sample: (0, L] with
/// L = min(12 hbar / y, 0.8 pi hbar / dx, 60), panels of width ~0.25, order 16.
QuadratureGrid default_target_grid(const HardyLineSample& phi);

struct InverseOptions {
  /// Relative L2 tolerance for the truncation-tail estimate.
  double tolerance = 1e-6;
  /// Largest admissible s y / hbar on the target grid.
  double amplification_guard = 30.0;
  /// Number of (1 - i z / hbar)^(-k) tail terms fitted on the outer parts of the line.
  int model_terms = 8;
  /// Fraction of the window (on each side) used for the tail fit.
  double fit_fraction = 0.25;
};

struct InverseResult {
  SampledHalfLineFunction f;
  /// Estimated relative L2 error from truncating the line integral.
  double tail_estimate = 0.0;
  int model_terms = 0;
};

/// f(s) = (2 pi hbar)^(-1/2) integral phi(x + i y) exp(-i s (x + i y) / hbar) dx.
///
/// The slowly decaying part of phi is fitted by a sum of (1 - i z / hbar)^(-k),
/// whose inverse transforms are known in closed form; the remainder is integrated
/// with the trapezoid rule over the sampled window.
InverseResult inverse_hft(const HardyLineSample& phi, const QuadratureGrid& target_grid,
                          const InverseOptions& options = {});

/// integral |phi(x + i y)|^2 dx = sum_i w_i |f_i|^2 exp(-2 s_i y / hbar).
double line_norm_sq(const SampledHalfLineFunction& f, double y);

struct SupNormResult {
  /// Supremum estimate: max(probe_max, limit).
  double value = 0.0;
  double probe_max = 0.0;
  double argmax_y = 0.0;
  /// Quadratic extrapolation to y -> 0+ from y_min, 2 y_min, 3 y_min.
  double limit = 0.0;
  /// Line norms ordered by increasing y are strictly decreasing.
  bool strictly_decreasing = true;
  std::vector<double> probes;      // sorted ascending
  std::vector<double> line_norms;  // matching `probes`
};

SupNormResult hardy_sup_norm(const SampledHalfLineFunction& f, std::vector<double> y_probes);

/// Squared Hardy norm of a line sample, via its inverse transform.
double hardy_norm_sq(const HardyLineSample& phi, const InverseOptions& options = {},
                     const std::optional<QuadratureGrid>& target = std::nullopt);

/// <phi|psi> from four Hardy norms (conjugate-linear in phi).
complex polarization_inner_product(const HardyLineSample& phi, const HardyLineSample& psi,
                                   const InverseOptions& options = {},
                                   const std::optional<QuadratureGrid>& target = std::nullopt);

/// inverse(forward(f)) on one line, compared with the exact profile on `target`.
struct RoundtripResult {
  double y = 0.0;
  double relative_error = 0.0;
  double tail_estimate = 0.0;
  SampledHalfLineFunction reconstructed;
};

/// Fixed comparison grid for roundtrips: 32 panels of order 16 on (0, 5].
QuadratureGrid roundtrip_target_grid();

RoundtripResult roundtrip(const std::function<complex(double)>& profile, double y, double hbar = 1.0,
                          const InverseOptions& options = {});

}  // namespace hftlab
