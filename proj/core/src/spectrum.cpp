#include "hftlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hftlab/deficiency.hpp"
#include "hftlab/errors.hpp"
#include "hftlab/friedrichs.hpp"
#include "hftlab/grid.hpp"
#include "hftlab/operators.hpp"
#include "hftlab/profiles.hpp"

namespace hftlab {

std::string_view to_string(SpectrumOperator op) {
  switch (op) {
    case SpectrumOperator::S:
      return "S";
    case SpectrumOperator::Z:
      return "Z";
    case SpectrumOperator::Z_squared_F:
      return "Z_squared_F";
    case SpectrumOperator::Z_sqrt:
      return "Z_sqrt";
  }
  return "?";
}

SpectrumOperator spectrum_operator_from_string(std::string_view name) {
  if (name == "S") return SpectrumOperator::S;
  if (name == "Z") return SpectrumOperator::Z;
  if (name == "Z_squared_F" || name == "Z2F") return SpectrumOperator::Z_squared_F;
  if (name == "Z_sqrt" || name == "Zsqrt") return SpectrumOperator::Z_sqrt;
  throw InputError("unknown operator '" + std::string(name) + "' (expected S, Z, Z_squared_F, Z_sqrt)");
}

bool SpectrumReport::all_pass() const {
  return std::all_of(numerical_evidence.begin(), numerical_evidence.end(),
                     [](const Evidence& e) { return e.pass; });
}

namespace {

void validate(const SpectrumParams& p) {
  if (!(p.hbar > 0.0)) throw InputError("spectrum_report: hbar must be positive");
  if (p.lengths.size() < 3) throw InputError("spectrum_report: need at least three lengths");
  for (std::size_t k = 1; k < p.lengths.size(); ++k)
    if (!(p.lengths[k] > p.lengths[k - 1])) throw InputError("spectrum_report: lengths must increase");
  if (!(p.mesh > 0.0) || p.lengths.front() / p.mesh < 4.0)
    throw InputError("spectrum_report: mesh too coarse for the shortest length");
  if (p.s_panels.size() < 2 || !(p.s_max > 0.0)) throw InputError("spectrum_report: bad S grid parameters");
}

SpectrumReport report_S(const SpectrumParams& p) {
  SpectrumReport r;
  r.operator_name = "S";
  r.point = "empty";
  r.residual = "empty";
  r.continuous = "[0, inf)";

  // The multiplication operator on a grid is diagonal: its eigenvalues are the nodes.
  std::vector<double> gaps, mins;
  double worst_node_mismatch = 0.0;
  for (int panels : p.s_panels) {
    const auto grid = QuadratureGrid::truncated_uniform(p.s_max, static_cast<std::size_t>(panels), 16);
    const auto f = SampledHalfLineFunction::sample(grid, [](double) { return complex(1.0); }, p.hbar);
    const auto sf = apply_S(f);
    double gap = grid.nodes().front();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      worst_node_mismatch = std::max(worst_node_mismatch, std::abs(sf.values()[i].real() - grid.nodes()[i]));
      if (i > 0) gap = std::max(gap, grid.nodes()[i] - grid.nodes()[i - 1]);
    }
    gap = std::max(gap, p.s_max - grid.nodes().back());
    gaps.push_back(gap);
    mins.push_back(grid.nodes().front());
  }
  r.numerical_evidence.push_back({"eigenvalues of the discretized multiplication operator are the grid nodes",
                                  worst_node_mismatch, "max |eigenvalue - node|",
                                  worst_node_mismatch == 0.0});
  bool shrinking = true;
  for (std::size_t k = 1; k < gaps.size(); ++k) shrinking = shrinking && gaps[k] < 0.75 * gaps[k - 1];
  r.numerical_evidence.push_back({"eigenvalues fill [0, s_max] with spacing -> 0 under refinement",
                                  gaps.back(), "largest gap on the finest grid", shrinking});
  r.numerical_evidence.push_back({"smallest eigenvalue -> 0 under refinement", mins.back(),
                                  "smallest node on the finest grid", mins.back() < mins.front()});

  const auto def = deficiency_indices(DeficiencyOperator::S, p.hbar, default_windows(p.hbar));
  r.numerical_evidence.push_back({"deficiency indices (0, 0): essentially self-adjoint",
                                  static_cast<double>(def.d_plus + def.d_minus), "d_plus + d_minus",
                                  def.d_plus == 0 && def.d_minus == 0});

  const auto grid = QuadratureGrid::truncated_uniform(40.0, 160, 16);
  const auto f = SampledHalfLineFunction::sample(grid, profile_by_name("exp").f, p.hbar);
  const auto g = SampledHalfLineFunction::sample(grid, profile_by_name("sexp").f, p.hbar);
  const double defect = std::abs(symmetry_defect(OperatorKind::S, f, g));
  r.numerical_evidence.push_back({"S is symmetric: no point or residual spectrum", defect,
                                  "|<f|S|g>* - <g|S|f>| for e^-s, s e^-s", defect < 1e-8});
  return r;
}

SpectrumReport report_Z(const SpectrumParams& p) {
  SpectrumReport r;
  r.operator_name = "Z";
  r.point = "empty";
  r.residual = "upper half-plane H and the real axis R (real axis: bounded, non-L2 adjoint kernel; flagged)";
  r.continuous = "empty";
  const auto windows = default_windows(p.hbar);

  int upper_total = 0, upper_members = 0, real_total = 0, real_flagged = 0, lower_total = 0, lower_members = 0;
  for (double re : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    for (double im : {-1.0, -0.25, 0.0, 0.25, 1.0, 4.0}) {
      const auto m = residual_membership_Z(complex(re, im), p.hbar, windows);
      if (im > 0.0) {
        ++upper_total;
        upper_members += m.member ? 1 : 0;
      } else if (im == 0.0) {
        ++real_total;
        real_flagged += (m.boundary_case && !m.member && m.trace.verdict == TraceVerdict::bounded) ? 1 : 0;
      } else {
        ++lower_total;
        lower_members += m.member ? 1 : 0;
      }
    }
  }
  r.numerical_evidence.push_back({"every sampled lambda with Im lambda > 0 lies in the residual spectrum",
                                  static_cast<double>(upper_members) / upper_total,
                                  "fraction of upper half-plane samples with an L2 adjoint kernel",
                                  upper_members == upper_total});
  r.numerical_evidence.push_back({"real-axis samples give a bounded, non-L2 adjoint kernel (boundary case)",
                                  static_cast<double>(real_flagged) / real_total,
                                  "fraction of real samples flagged as boundary cases",
                                  real_flagged == real_total});
  r.numerical_evidence.push_back({"lower half-plane samples have no L2 adjoint kernel",
                                  static_cast<double>(lower_members), "lower half-plane members",
                                  lower_members == 0});

  // Point spectrum: (Z - lambda) u = 0 gives u = exp(-i lambda s / hbar) with |u(0)| = 1,
  // which violates the boundary condition u(0) = 0 of D(Z).
  const auto grid = QuadratureGrid::truncated_uniform(10.0, 40, 16);
  const auto u = SampledHalfLineFunction::sample(
      grid, [&](double s) { return std::exp(complex(0.0, -1.0) * complex(0.5, 1.0) * s / p.hbar); }, p.hbar);
  const auto rep = domain_membership(u);
  r.numerical_evidence.push_back({"eigenfunction candidates violate f(0) = 0, so the point spectrum is empty",
                                  std::abs(rep.boundary_value_at_zero), "|u(0)| for lambda = 0.5 + i",
                                  !rep.contains(OperatorDomain::Z)});

  const auto def = deficiency_indices(DeficiencyOperator::Z, p.hbar, windows);
  r.numerical_evidence.push_back({"unequal deficiency indices (0, 1): no self-adjoint extension",
                                  static_cast<double>(def.d_minus - def.d_plus), "d_minus - d_plus",
                                  def.d_plus == 0 && def.d_minus == 1});
  return r;
}

SpectrumReport report_dirichlet(const SpectrumParams& p, bool root) {
  SpectrumReport r;
  r.operator_name = root ? "Z_sqrt" : "Z_squared_F";
  r.point = "empty";
  r.residual = "empty";
  r.continuous = "[0, inf)";

  std::vector<double> mins, scaled, counts, gaps;
  double worst_negative = 0.0;
  const double threshold = root ? 1.0 * p.hbar : 1.0 * p.hbar * p.hbar;
  for (double L : p.lengths) {
    const int n = static_cast<int>(std::lround(L / p.mesh)) - 1;
    const auto op = build_friedrichs_Zsq(L, n, p.hbar);
    Eigen::VectorXd ev;
    if (root) {
      ev = sqrt_friedrichs(op).root_eigenvalues;
    } else {
      ev = decompose(op).eigenvalues;
    }
    worst_negative = std::min(worst_negative, ev.minCoeff());
    mins.push_back(ev(0));
    const double oracle = root ? p.hbar * std::numbers::pi / L
                               : std::pow(p.hbar * std::numbers::pi / L, 2);
    scaled.push_back(ev(0) / oracle);
    counts.push_back(static_cast<double>((ev.array() < threshold).count()));
    // spacing near the threshold energy
    Eigen::Index k = 0;
    while (k + 1 < ev.size() && ev(k + 1) < threshold) ++k;
    gaps.push_back(k + 1 < ev.size() ? ev(k + 1) - ev(k) : ev(k) - ev(k - 1));
  }

  r.numerical_evidence.push_back({"all eigenvalues are nonnegative", worst_negative,
                                  "smallest eigenvalue over all builds", worst_negative >= -1e-12});
  bool decreasing = true;
  for (std::size_t k = 1; k < mins.size(); ++k) decreasing = decreasing && mins[k] < mins[k - 1];
  double scaled_err = 0.0;
  for (double v : scaled) scaled_err = std::max(scaled_err, std::abs(v - 1.0));
  r.numerical_evidence.push_back({root ? "min eigenvalue ~ hbar pi / L -> 0 as L grows"
                                       : "min eigenvalue ~ (hbar pi / L)^2 -> 0 as L grows",
                                  mins.back(), "smallest eigenvalue at the largest L",
                                  decreasing && scaled_err < 1e-2});
  bool denser = true;
  for (std::size_t k = 1; k < counts.size(); ++k) denser = denser && counts[k] >= 1.8 * counts[k - 1];
  r.numerical_evidence.push_back({"eigenvalue density below a fixed level grows proportionally to L",
                                  counts.back(), "eigenvalues below the level at the largest L", denser});
  bool closing = true;
  for (std::size_t k = 1; k < gaps.size(); ++k) closing = closing && gaps[k] < 0.75 * gaps[k - 1];
  r.numerical_evidence.push_back({"level spacing at fixed energy -> 0: no isolated eigenvalues survive L -> inf",
                                  gaps.back(), "spacing near the level at the largest L", closing});
  return r;
}

}  // namespace

SpectrumReport spectrum_report(SpectrumOperator op, const SpectrumParams& params) {
  validate(params);
  switch (op) {
    case SpectrumOperator::S:
      return report_S(params);
    case SpectrumOperator::Z:
      return report_Z(params);
    case SpectrumOperator::Z_squared_F:
      return report_dirichlet(params, false);
    case SpectrumOperator::Z_sqrt:
      return report_dirichlet(params, true);
  }
  throw InputError("spectrum_report: unknown operator");
}

}  // namespace hftlab
