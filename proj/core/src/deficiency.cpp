#include "hftlab/deficiency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hftlab/errors.hpp"

namespace hftlab {

std::string_view to_string(DeficiencyOperator op) {
  switch (op) {
    case DeficiencyOperator::S:
      return "S";
    case DeficiencyOperator::Z:
      return "Z";
    case DeficiencyOperator::Z_squared:
      return "Z_squared";
  }
  return "?";
}

DeficiencyOperator deficiency_operator_from_string(std::string_view name) {
  if (name == "S") return DeficiencyOperator::S;
  if (name == "Z") return DeficiencyOperator::Z;
  if (name == "Z_squared" || name == "Z2" || name == "Zsq") return DeficiencyOperator::Z_squared;
  throw InputError("unknown operator '" + std::string(name) + "' (expected S, Z, Z_squared)");
}

std::string_view to_string(TraceVerdict v) {
  switch (v) {
    case TraceVerdict::convergent:
      return "convergent";
    case TraceVerdict::divergent:
      return "divergent";
    case TraceVerdict::bounded:
      return "bounded";
  }
  return "?";
}

std::vector<double> default_windows(double hbar) { return {5.0 * hbar, 10.0 * hbar, 20.0 * hbar, 40.0 * hbar}; }

namespace {

void validate_windows(const std::vector<double>& windows) {
  if (windows.size() < 3) throw InputError("norm trace: at least 3 windows are required");
  for (std::size_t k = 0; k < windows.size(); ++k) {
    if (!(windows[k] > 0.0) || !std::isfinite(windows[k]))
      throw InputError("norm trace: windows must be positive and finite");
    if (k > 0 && !(windows[k] > windows[k - 1]))
      throw InputError("norm trace: windows must be strictly increasing");
  }
}

// int_a^b exp(2 Re(mu) s) ds by composite Gauss-Legendre.
double integrate_modulus_sq(double rate, double a, double b) {
  static const auto rule = [] {
    std::vector<double> x, w;
    gauss_legendre(16, x, w);
    return std::pair{x, w};
  }();
  constexpr int panels = 64;
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (std::size_t j = 0; j < rule.first.size(); ++j) {
      const double s = mid + 0.5 * h * rule.first[j];
      acc += 0.5 * h * rule.second[j] * std::exp(2.0 * rate * s);
    }
  }
  return acc;
}

}  // namespace

NormTrace exponential_norm_trace(complex mu, const std::vector<double>& windows) {
  validate_windows(windows);
  NormTrace t;
  t.windows = windows;
  double total = 0.0;
  double lo = 0.0;
  for (double w : windows) {
    const double inc = integrate_modulus_sq(mu.real(), lo, w);
    total += inc;
    t.increments.push_back(inc);
    t.cumulative.push_back(total);
    lo = w;
  }
  bool shrinking = true, growing = true;
  for (std::size_t k = 1; k < windows.size(); ++k) {
    const double prev = t.increments[k - 1];
    const double cur = t.increments[k];
    if (!(cur <= 0.1 * prev || cur <= 1e-15 * t.cumulative[k])) shrinking = false;
    if (!(t.cumulative[k] >= 10.0 * t.cumulative[k - 1])) growing = false;
  }
  t.verdict = shrinking ? TraceVerdict::convergent
                        : (growing ? TraceVerdict::divergent : TraceVerdict::bounded);
  return t;
}

DeficiencyReport deficiency_indices(DeficiencyOperator op, double hbar,
                                    const std::vector<double>& windows) {
  if (!(hbar > 0.0)) throw InputError("deficiency_indices: hbar must be positive");
  validate_windows(windows);
  DeficiencyReport r;
  r.op = op;
  r.hbar = hbar;

  auto add = [&](int sign, complex mu, std::string desc) {
    KernelCandidate c;
    c.sign = sign;
    c.exponent = mu;
    c.exponent_description = std::move(desc);
    c.trace = exponential_norm_trace(mu, windows);
    c.L2_member = c.trace.verdict == TraceVerdict::convergent;
    if (c.L2_member) (sign > 0 ? r.d_plus : r.d_minus) += 1;
    r.kernel_candidates.push_back(std::move(c));
  };

  switch (op) {
    case DeficiencyOperator::S:
      // (s -/+ i) u(s) = 0 forces u = 0 almost everywhere: no candidates.
      break;
    case DeficiencyOperator::Z:
      // i hbar u' = +/- i u  =>  u = exp(+/- s / hbar)
      add(+1, complex(1.0 / hbar, 0.0), "exp(+s/hbar)");
      add(-1, complex(-1.0 / hbar, 0.0), "exp(-s/hbar)");
      break;
    case DeficiencyOperator::Z_squared: {
      // -hbar^2 u'' = +/- i u  =>  mu^2 = -/+ i / hbar^2
      const complex rot_minus = std::polar(1.0 / hbar, -std::numbers::pi / 4.0);
      const complex rot_plus = std::polar(1.0 / hbar, std::numbers::pi / 4.0);
      add(+1, rot_minus, "exp(+e^{-i pi/4} s/hbar)");
      add(+1, -rot_minus, "exp(-e^{-i pi/4} s/hbar)");
      add(-1, rot_plus, "exp(+e^{+i pi/4} s/hbar)");
      add(-1, -rot_plus, "exp(-e^{+i pi/4} s/hbar)");
      break;
    }
  }
  return r;
}

ResidualMembership residual_membership_Z(complex lambda, double hbar,
                                         const std::vector<double>& windows) {
  if (!(hbar > 0.0)) throw InputError("residual_membership_Z: hbar must be positive");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw InputError("residual_membership_Z: lambda must be finite");
  ResidualMembership r;
  r.lambda = lambda;
  const complex mu = complex(0.0, -1.0) * std::conj(lambda) / hbar;
  // Stretch the windows to the decay length hbar / |Im lambda| when that is longer,
  // so weakly decaying kernels are not mistaken for bounded ones.
  std::vector<double> w = windows;
  if (lambda.imag() != 0.0) {
    const double stretch = std::max(1.0, hbar / std::abs(lambda.imag()));
    for (auto& x : w) x *= stretch;
  }
  r.trace = exponential_norm_trace(mu, w);
  r.member = r.trace.verdict == TraceVerdict::convergent;
  r.boundary_case = lambda.imag() == 0.0;
  return r;
}

}  // namespace hftlab
