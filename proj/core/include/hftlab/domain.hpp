#pragma once

#include <array>
#include <set>
#include <string_view>

#include "hftlab/errors.hpp"
#include "hftlab/sampled.hpp"

namespace hftlab {

enum class OperatorDomain { S, Z, Z_dagger };

std::string_view to_string(OperatorDomain d);

/// Truncated integrals over windows W/4, W/2, W of the grid extent.
struct WindowTrace {
  std::array<double, 3> partial{};
  /// Successive increments shrink (ratio <= 0.75) or are negligible.
  bool converged = false;
};

/// Evidence for which operator domains a sampled function belongs to.
struct DomainReport {
  bool in_L2 = false;
  /// Discrete derivative has a converging L2 norm; stands in for absolute continuity.
  bool abs_continuous_proxy = false;
  complex boundary_value_at_zero{};
  std::set<OperatorDomain> member_of;

  WindowTrace norm_trace;        // |f|^2
  WindowTrace moment_trace;      // s^2 |f|^2
  WindowTrace derivative_trace;  // |f'|^2

  bool contains(OperatorDomain d) const { return member_of.count(d) != 0; }
};

/// |f(0)| below this counts as satisfying the boundary condition of D(Z).
inline constexpr double boundary_tolerance = 1e-6;

WindowTrace window_trace(const QuadratureGrid& grid, const std::vector<double>& density);

DomainReport domain_membership(const SampledHalfLineFunction& f);

/// Raised when a function lies outside an operation's required domain.
class DomainPreconditionError : public PreconditionError {
 public:
  DomainPreconditionError(const std::string& what, DomainReport report)
      : PreconditionError(what), report_(std::move(report)) {}
  const DomainReport& report() const noexcept { return report_; }

 private:
  DomainReport report_;
};

}  // namespace hftlab
