#include "hftlab/differentiation.hpp"

#include <cmath>

#include "hftlab/errors.hpp"

namespace hftlab {

Eigen::MatrixXd differentiation_matrix(std::span<const double> nodes) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  // Barycentric weights in log form: wide node ranges overflow plain products.
  Eigen::VectorXd log_b(n);
  Eigen::VectorXd sign_b(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double lg = 0.0, sg = 1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == j) continue;
      const double d = nodes[j] - nodes[k];
      lg -= std::log(std::abs(d));
      if (d < 0.0) sg = -sg;
    }
    log_b(j) = lg;
    sign_b(j) = sg;
  }
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double diag = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double ratio = sign_b(j) * sign_b(i) * std::exp(log_b(j) - log_b(i));
      D(i, j) = ratio / (nodes[i] - nodes[j]);
      diag -= D(i, j);
    }
    D(i, i) = diag;
  }
  return D;
}

DerivativeResult differentiate(const QuadratureGrid& grid, std::span<const complex> values) {
  if (values.size() != grid.size()) throw InputError("differentiate: value count does not match grid");
  const auto& s = grid.nodes();
  DerivativeResult out;
  out.values.assign(values.size(), complex{});

  if (grid.scheme() == QuadratureScheme::truncated_uniform) {
    const std::size_t q = grid.panel_order();
    if (q < 2) throw InputError("differentiate: panels need at least two nodes");
    // Every panel is a translate of the first, so one matrix serves all.
    const Eigen::MatrixXd D = differentiation_matrix(std::span<const double>(s.data(), q));
    for (std::size_t p = 0; p < grid.panel_count(); ++p) {
      const std::size_t off = p * q;
      for (std::size_t i = 0; i < q; ++i) {
        complex acc{};
        for (std::size_t j = 0; j < q; ++j)
          acc += D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * values[off + j];
        out.values[off + i] = acc;
      }
    }
    return out;
  }

  const double c = grid.scale();
  const Eigen::MatrixXd D = differentiation_matrix(s);
  const std::size_t n = s.size();
  std::vector<complex> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = values[i] * std::exp(0.5 * c * s[i]);
  for (std::size_t i = 0; i < n; ++i) {
    complex dg{};
    for (std::size_t j = 0; j < n; ++j) dg += D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * g[j];
    out.values[i] = std::exp(-0.5 * c * s[i]) * (dg - 0.5 * c * g[i]);
  }
  return out;
}

DerivativeResult central_difference(double h, std::span<const complex> v) {
  const std::size_t n = v.size();
  if (n < 5) throw InputError("central_difference: need at least 5 nodes for the stencil");
  if (!(h > 0.0)) throw InputError("central_difference: spacing must be positive");
  DerivativeResult out;
  out.values.assign(n, complex{});
  out.boundary_rows = 2;
  const double inv = 1.0 / (12.0 * h);
  for (std::size_t i = 2; i + 2 < n; ++i)
    out.values[i] = inv * (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]);
  out.values[0] = inv * (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]);
  out.values[1] = inv * (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]);
  out.values[n - 1] = -inv * (-25.0 * v[n - 1] + 48.0 * v[n - 2] - 36.0 * v[n - 3] + 16.0 * v[n - 4] -
                              3.0 * v[n - 5]);
  out.values[n - 2] = -inv * (-3.0 * v[n - 1] - 10.0 * v[n - 2] + 18.0 * v[n - 3] - 6.0 * v[n - 4] +
                              v[n - 5]);
  return out;
}

complex boundary_value(const QuadratureGrid& grid, std::span<const complex> values) {
  if (grid.size() < 3) throw InputError("boundary_value: need three nodes");
  const double x0 = grid.nodes()[0], x1 = grid.nodes()[1], x2 = grid.nodes()[2];
  // Lagrange basis evaluated at s = 0.
  const double l0 = (x1 * x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (x0 * x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (x0 * x1) / ((x2 - x0) * (x2 - x1));
  return l0 * values[0] + l1 * values[1] + l2 * values[2];
}

}  // namespace hftlab
