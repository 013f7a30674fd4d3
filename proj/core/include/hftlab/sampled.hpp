#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hftlab/grid.hpp"

namespace hftlab {

using complex = std::complex<double>;

/// z = x + i y with y > 0.
struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;

  HalfPlanePoint() = default;
  HalfPlanePoint(double x_, double y_);
  complex z() const noexcept { return {x, y}; }
};

/// f(s) on a quadrature grid over (0, inf), together with the action unit hbar.
class SampledHalfLineFunction {
 public:
  SampledHalfLineFunction(QuadratureGrid grid, std::vector<complex> values, double hbar = 1.0);

  static SampledHalfLineFunction sample(const QuadratureGrid& grid,
                                        const std::function<complex(double)>& f,
                                        double hbar = 1.0);
  static SampledHalfLineFunction zero(const QuadratureGrid& grid, double hbar = 1.0);

  const QuadratureGrid& grid() const noexcept { return grid_; }
  const std::vector<complex>& values() const noexcept { return values_; }
  double hbar() const noexcept { return hbar_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// sum_i w_i |f_i|^2
  double norm_sq() const;
  bool is_zero() const;

  SampledHalfLineFunction with_values(std::vector<complex> values) const {
    return {grid_, std::move(values), hbar_};
  }

 private:
  QuadratureGrid grid_;
  std::vector<complex> values_;
  double hbar_;
};

/// phi(x + i y) sampled at fixed y along increasing x nodes.
class HardyLineSample {
 public:
  HardyLineSample(double y, std::vector<double> x_nodes, std::vector<complex> values,
                  double hbar = 1.0);

  double y() const noexcept { return y_; }
  const std::vector<double>& x_nodes() const noexcept { return x_; }
  const std::vector<complex>& values() const noexcept { return values_; }
  double hbar() const noexcept { return hbar_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Trapezoid weights for the x nodes.
  std::vector<double> trapezoid_weights() const;
  /// Common spacing if the nodes are uniform to 1e-9 relative, else 0.
  double uniform_spacing() const;
  /// Trapezoid estimate of the line integral of |phi|^2.
  double line_norm_sq() const;
  bool same_sampling(const HardyLineSample& other) const;
  bool is_zero() const;

  HardyLineSample with_values(std::vector<complex> values) const {
    return {y_, x_, std::move(values), hbar_};
  }

 private:
  double y_;
  std::vector<double> x_;
  std::vector<complex> values_;
  double hbar_;
};

/// Quadrature inner product sum_i w_i conj(f_i) g_i; grids must match.
complex inner_product(const SampledHalfLineFunction& f, const SampledHalfLineFunction& g);

/// n equally spaced nodes from lo to hi inclusive.
std::vector<double> uniform_nodes(double lo, double hi, std::size_t n);

/// ||a - b|| / ||b|| on a shared grid.
double relative_distance(const SampledHalfLineFunction& a, const SampledHalfLineFunction& b);

}  // namespace hftlab
