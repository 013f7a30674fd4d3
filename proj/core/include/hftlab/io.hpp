#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hftlab/physics.hpp"
#include "hftlab/sampled.hpp"

namespace hftlab {

// Plain ASCII CSV, C locale, %.17g so doubles round-trip exactly.

void write_csv(std::ostream& os, const SampledHalfLineFunction& f);
void write_csv(std::ostream& os, const HardyLineSample& phi);
void write_eigenvalues_csv(std::ostream& os, const std::vector<double>& eigenvalues);
void write_demo_csv(std::ostream& os, const TimeRepresentation& rep);

/// Rows of `s,re,im`. Nodes are checked against the grid to 1e-12 relative.
SampledHalfLineFunction read_sampled_csv(std::istream& is, const QuadratureGrid& grid, double hbar = 1.0);
/// Rows of `x,re,im` with the `# y=.. hbar=..` line.
HardyLineSample read_line_csv(std::istream& is);

std::string format_double(double v);

/// Writes text to a file, creating parent directories. Throws Error on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace hftlab
