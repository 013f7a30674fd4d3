#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hftlab {

enum class SpectrumOperator { S, Z, Z_squared_F, Z_sqrt };

std::string_view to_string(SpectrumOperator op);
SpectrumOperator spectrum_operator_from_string(std::string_view name);

struct Evidence {
  std::string claim;
  double statistic = 0.0;
  std::string detail;
  bool pass = false;
};

struct SpectrumReport {
  std::string operator_name;
  std::string point;
  std::string residual;
  std::string continuous;
  std::vector<Evidence> numerical_evidence;

  bool all_pass() const;
};

struct SpectrumParams {
  double hbar = 1.0;
  /// Truncation lengths for the Dirichlet builds; spectral claims are L -> inf trends.
  std::vector<double> lengths{10.0, 20.0, 40.0};
  /// Mesh width shared by every Dirichlet build.
  double mesh = 0.1;
  /// Grid extent and refinement levels for the multiplication operator S.
  double s_max = 10.0;
  std::vector<int> s_panels{4, 8, 16};
};

SpectrumReport spectrum_report(SpectrumOperator op, const SpectrumParams& params = {});

}  // namespace hftlab
