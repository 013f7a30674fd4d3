#include "hftlab/domain.hpp"

#include <cmath>

#include "hftlab/differentiation.hpp"

namespace hftlab {

std::string_view to_string(OperatorDomain d) {
  switch (d) {
    case OperatorDomain::S:
      return "D(S)";
    case OperatorDomain::Z:
      return "D(Z)";
    case OperatorDomain::Z_dagger:
      return "D(Z_dagger)";
  }
  return "?";
}

WindowTrace window_trace(const QuadratureGrid& grid, const std::vector<double>& density) {
  const auto& s = grid.nodes();
  const auto& w = grid.weights();
  const double extent = s.back();
  const std::array<double, 3> windows{0.25 * extent, 0.5 * extent, extent};
  WindowTrace t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double term = w[i] * density[i];
    for (std::size_t k = 0; k < 3; ++k)
      if (s[i] <= windows[k] * (1.0 + 1e-12)) t.partial[k] += term;
  }
  const double d1 = t.partial[1] - t.partial[0];
  const double d2 = t.partial[2] - t.partial[1];
  const bool finite = std::isfinite(t.partial[2]);
  const bool negligible = d2 <= 1e-12 * t.partial[2];
  t.converged = finite && (negligible || d2 <= 0.75 * d1);
  return t;
}

DomainReport domain_membership(const SampledHalfLineFunction& f) {
  const auto& grid = f.grid();
  const auto& s = grid.nodes();
  const auto& v = f.values();
  const std::size_t n = v.size();

  std::vector<double> dens(n), moment(n), deriv(n);
  const auto d = differentiate(grid, v);
  for (std::size_t i = 0; i < n; ++i) {
    dens[i] = std::norm(v[i]);
    moment[i] = s[i] * s[i] * dens[i];
    deriv[i] = std::norm(d.values[i]);
  }

  DomainReport r;
  r.norm_trace = window_trace(grid, dens);
  r.moment_trace = window_trace(grid, moment);
  r.derivative_trace = window_trace(grid, deriv);
  r.in_L2 = r.norm_trace.converged;
  r.abs_continuous_proxy = r.derivative_trace.converged;
  r.boundary_value_at_zero = boundary_value(grid, v);

  if (r.in_L2 && r.moment_trace.converged) r.member_of.insert(OperatorDomain::S);
  if (r.in_L2 && r.abs_continuous_proxy) {
    r.member_of.insert(OperatorDomain::Z_dagger);
    if (std::abs(r.boundary_value_at_zero) < boundary_tolerance) r.member_of.insert(OperatorDomain::Z);
  }
  return r;
}

}  // namespace hftlab
