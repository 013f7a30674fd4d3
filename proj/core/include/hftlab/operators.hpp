#pragma once

#include <vector>

#include "hftlab/domain.hpp"
#include "hftlab/sampled.hpp"

namespace hftlab {

enum class Representation { s_representation, z_representation };
enum class OperatorKind { S, Z };

std::string_view to_string(Representation rep);

// s-representation: (S f)(s) = s f(s), (Z f)(s) = i hbar f'(s).
SampledHalfLineFunction apply_S(const SampledHalfLineFunction& f);
SampledHalfLineFunction apply_Z(const SampledHalfLineFunction& f);

// z-representation along a line: (S phi)(z) = -i hbar phi'(z), (Z phi)(z) = z phi(z).
// The derivative is taken along x with fourth-order central differences, so the
// first and last two nodes carry one-sided stencils.
HardyLineSample apply_S(const HardyLineSample& phi);
HardyLineSample apply_Z(const HardyLineSample& phi);

/// Line on which z-representation checks are carried out.
struct LineSpec {
  double y = 0.5;
  std::vector<double> x_nodes;  // empty: uniform [-20 hbar, 20 hbar], spacing 0.01 hbar
};

struct CommutatorResult {
  /// ||([Z,S] - i hbar) f|| / ||f|| on interior nodes.
  double residual = 0.0;
  DomainReport domain;
};

/// Requires f in D(S) and in D(Z_dagger); the strict D(Z) verdict is reported in `domain`.
CommutatorResult commutator_residual(const SampledHalfLineFunction& f, Representation rep,
                                     const LineSpec& line = {});
double commutator_residual(const HardyLineSample& phi);

/// <f|A|g>^* - <g|A|f>. Zero for S; i hbar f(0) conj(g(0)) for Z.
complex symmetry_defect(OperatorKind op, const SampledHalfLineFunction& f,
                        const SampledHalfLineFunction& g);

/// Relative interior L2 distance on a line sample, skipping `skip` rows per end.
double interior_relative_distance(const HardyLineSample& a, const HardyLineSample& b,
                                  std::size_t skip = 2);

}  // namespace hftlab
