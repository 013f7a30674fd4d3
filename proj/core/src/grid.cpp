#include "hftlab/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "hftlab/errors.hpp"

namespace hftlab {

std::string_view to_string(QuadratureScheme scheme) {
  switch (scheme) {
    case QuadratureScheme::gauss_laguerre:
      return "gauss_laguerre";
    case QuadratureScheme::truncated_uniform:
      return "truncated_uniform";
  }
  return "unknown";
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n == 0) throw InputError("gauss_legendre: order must be positive");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

QuadratureGrid QuadratureGrid::truncated_uniform(double length, std::size_t panels,
                                                 std::size_t order) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw InputError("truncated_uniform: length must be positive and finite");
  if (panels == 0 || order == 0)
    throw InputError("truncated_uniform: need at least one panel and one node per panel");

  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);

  QuadratureGrid g;
  g.scheme_ = QuadratureScheme::truncated_uniform;
  g.panels_ = panels;
  g.order_ = order;
  g.length_ = length;
  g.panel_width_ = length / static_cast<double>(panels);
  g.nodes_.reserve(panels * order);
  g.weights_.reserve(panels * order);
  const double half = 0.5 * g.panel_width_;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * g.panel_width_;
    for (std::size_t j = 0; j < order; ++j) {
      g.nodes_.push_back(mid + half * gx[j]);
      g.weights_.push_back(half * gw[j]);
    }
  }
  g.validate();
  return g;
}

namespace {

// L_{n-1}(x), L_n(x) by the three-term recurrence.
std::pair<double, double> laguerre_pair(std::size_t n, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  if (n == 0) return {0.0, 1.0};
  for (std::size_t k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - static_cast<double>(k) * prev) /
                        (static_cast<double>(k) + 1.0);
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace

QuadratureGrid QuadratureGrid::gauss_laguerre(std::size_t n, double scale) {
  if (n < 2 || n > 200) throw InputError("gauss_laguerre: node count must lie in [2, 200]");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw InputError("gauss_laguerre: scale must be positive and finite");

  // Golub-Welsch for starting values, Newton polish on L_n.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (std::size_t i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) sub(i) = static_cast<double>(i + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  QuadratureGrid g;
  g.scheme_ = QuadratureScheme::gauss_laguerre;
  g.panels_ = 1;
  g.order_ = n;
  g.length_ = std::numeric_limits<double>::infinity();
  g.panel_width_ = std::numeric_limits<double>::infinity();
  g.scale_ = scale;
  g.nodes_.resize(n);
  g.weights_.resize(n);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = eig.eigenvalues()(static_cast<Eigen::Index>(i));
    for (int iter = 0; iter < 20; ++iter) {
      auto [lm1, ln] = laguerre_pair(n, x);
      const double dl = dn * (ln - lm1) / x;
      const double dx = ln / dl;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * x) break;
    }
    // w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2), carried in log form with exp(+x) folded in.
    const double lnp1 = laguerre_pair(n + 1, x).second;
    const double log_w = std::log(x) - 2.0 * std::log(dn + 1.0) - 2.0 * std::log(std::abs(lnp1));
    g.nodes_[i] = x / scale;
    g.weights_[i] = std::exp(log_w + x) / scale;
  }
  g.validate();
  return g;
}

void QuadratureGrid::validate() const {
  if (nodes_.size() != weights_.size()) throw InputError("grid: node/weight count mismatch");
  if (nodes_.empty()) throw InputError("grid: empty");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > 0.0) || !std::isfinite(nodes_[i]))
      throw InputError("grid: nodes must be positive and finite");
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
      throw InputError("grid: weights must be positive and finite");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1]))
      throw InputError("grid: nodes must be strictly increasing");
  }
}

}  // namespace hftlab
