#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hftlab/sampled.hpp"

namespace hftlab {

/// Derivative values plus how many rows at each end came from one-sided stencils.
struct DerivativeResult {
  std::vector<complex> values;
  std::size_t boundary_rows = 0;  // per end
};

/// Barycentric differentiation matrix for polynomial interpolation on `nodes`.
Eigen::MatrixXd differentiation_matrix(std::span<const double> nodes);

/// d/ds on a quadrature grid.
///
/// truncated_uniform: per-panel polynomial (barycentric) differentiation on the
/// panel's Gauss-Legendre nodes. gauss_laguerre: the weighted function
/// f(s) exp(scale s / 2) is interpolated and the weight is differentiated exactly.
DerivativeResult differentiate(const QuadratureGrid& grid, std::span<const complex> values);

/// Fourth-order central differences on a uniform mesh with spacing h; the first
/// and last two rows use one-sided fourth-order stencils and are flagged.
DerivativeResult central_difference(double h, std::span<const complex> values);

/// f(0) by quadratic extrapolation through the three smallest nodes.
complex boundary_value(const QuadratureGrid& grid, std::span<const complex> values);

}  // namespace hftlab
