#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hftlab/sampled.hpp"

namespace hftlab {

enum class DeficiencyOperator { S, Z, Z_squared };

std::string_view to_string(DeficiencyOperator op);
DeficiencyOperator deficiency_operator_from_string(std::string_view name);

enum class TraceVerdict {
  convergent,   // window increments shrink at least 10x per doubling
  divergent,    // truncated norms grow at least 10x per doubling
  bounded,      // neither: e.g. |u| = 1, linear growth of the truncated norm
};

std::string_view to_string(TraceVerdict v);

/// Truncated norms int_0^W |u|^2 ds over the windows, plus the increments
/// between consecutive windows (integrated directly, not by subtraction).
struct NormTrace {
  std::vector<double> windows;
  std::vector<double> cumulative;
  std::vector<double> increments;
  TraceVerdict verdict = TraceVerdict::bounded;
};

/// Truncated-norm trace of u(s) = exp(mu s).
NormTrace exponential_norm_trace(complex mu, const std::vector<double>& windows);

struct KernelCandidate {
  int sign = +1;  // +1: kernel of (A^dagger - i), -1: kernel of (A^dagger + i)
  complex exponent;
  std::string exponent_description;
  bool L2_member = false;
  NormTrace trace;
};

struct DeficiencyReport {
  DeficiencyOperator op = DeficiencyOperator::Z;
  double hbar = 1.0;
  int d_plus = 0;
  int d_minus = 0;
  std::vector<KernelCandidate> kernel_candidates;
};

/// Default windows {5, 10, 20, 40} * hbar.
std::vector<double> default_windows(double hbar = 1.0);

/// Closed-form kernel candidates of A^dagger -/+ i with a numerical L2 membership
/// decision for each.
DeficiencyReport deficiency_indices(DeficiencyOperator op, double hbar,
                                    const std::vector<double>& windows);

struct ResidualMembership {
  complex lambda;
  /// exp(-i conj(lambda) s / hbar) is square integrable.
  bool member = false;
  /// Real lambda: |u| = 1 is bounded but not L2.
  bool boundary_case = false;
  NormTrace trace;
};

/// Kernel of (Z^dagger - conj(lambda)) tested for L2 membership. Windows are
/// stretched by hbar / |Im lambda| when that exceeds 1.
ResidualMembership residual_membership_Z(complex lambda, double hbar,
                                         const std::vector<double>& windows);

}  // namespace hftlab
