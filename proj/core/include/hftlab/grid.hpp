#pragma once

#include <cstddef>
#include <string_view>
#include <type_traits>
#include <vector>

namespace hftlab {

enum class QuadratureScheme { gauss_laguerre, truncated_uniform };

std::string_view to_string(QuadratureScheme scheme);

/// Quadrature rule on the half line (0, inf).
///
/// `gauss_laguerre`: n-point Gauss-Laguerre nodes scaled by 1/scale, weights
/// already multiplied by exp(scale * s) so that sum_i w_i g(s_i) approximates
/// the plain integral of g over (0, inf).
///
/// `truncated_uniform`: (0, length] split into equal panels, each carrying
/// `order` Gauss-Legendre nodes. All nodes are interior, so s = 0 is never
/// sampled.
class QuadratureGrid {
 public:
  static QuadratureGrid gauss_laguerre(std::size_t n, double scale = 1.0);
  static QuadratureGrid truncated_uniform(double length, std::size_t panels,
                                          std::size_t order = 16);

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  QuadratureScheme scheme() const noexcept { return scheme_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Panel bookkeeping; for Gauss-Laguerre there is one panel of `size()` nodes.
  std::size_t panel_count() const noexcept { return panels_; }
  std::size_t panel_order() const noexcept { return order_; }
  double panel_width() const noexcept { return panel_width_; }
  /// Upper end of the covered interval (infinity for Gauss-Laguerre).
  double length() const noexcept { return length_; }
  /// Decay scale of the Laguerre weight exp(-scale * s); 0 for uniform grids.
  double scale() const noexcept { return scale_; }

  /// Integral of g over the grid: sum_i w_i g_i.
  template <class Range>
  auto integrate(const Range& values) const {
    using T = std::decay_t<decltype(values[0])>;
    T acc{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * values[i];
    return acc;
  }

  bool operator==(const QuadratureGrid&) const = default;

 private:
  QuadratureGrid() = default;
  void validate() const;

  std::vector<double> nodes_;
  std::vector<double> weights_;
  QuadratureScheme scheme_ = QuadratureScheme::truncated_uniform;
  std::size_t panels_ = 0;
  std::size_t order_ = 0;
  double panel_width_ = 0.0;
  double length_ = 0.0;
  double scale_ = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hftlab
