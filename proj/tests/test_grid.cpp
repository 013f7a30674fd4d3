#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hftlab/differentiation.hpp"
#include "hftlab/errors.hpp"
#include "hftlab/grid.hpp"

using namespace hftlab;

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

TEST(GaussLaguerre, TwoPointNodesMatchClosedForm) {
  auto g = QuadratureGrid::gauss_laguerre(2);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_NEAR(g.nodes()[0], 2.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(g.nodes()[1], 2.0 + std::sqrt(2.0), 1e-14);
  // Classical weights (2 +/- sqrt 2)/4, here multiplied back by exp(x).
  EXPECT_NEAR(g.weights()[0], (2.0 + std::sqrt(2.0)) / 4.0 * std::exp(g.nodes()[0]), 1e-13);
  EXPECT_NEAR(g.weights()[1], (2.0 - std::sqrt(2.0)) / 4.0 * std::exp(g.nodes()[1]), 1e-12);
}

TEST(GaussLaguerre, IntegratesMomentsExactly) {
  for (std::size_t n : {5u, 20u, 60u}) {
    auto g = QuadratureGrid::gauss_laguerre(n);
    for (int k = 0; k < static_cast<int>(std::min<std::size_t>(2 * n - 1, 12)); ++k) {
      std::vector<double> v;
      for (double s : g.nodes()) v.push_back(std::pow(s, k) * std::exp(-s));
      EXPECT_NEAR(g.integrate(v) / factorial(k), 1.0, 1e-11) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussLaguerre, ScaleStretchesNodes) {
  auto g1 = QuadratureGrid::gauss_laguerre(16);
  auto g2 = QuadratureGrid::gauss_laguerre(16, 2.0);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(g2.nodes()[i], g1.nodes()[i] / 2.0, 1e-13);
  std::vector<double> v;
  for (double s : g2.nodes()) v.push_back(std::exp(-2.0 * s));
  EXPECT_NEAR(g2.integrate(v), 0.5, 1e-13);
}

TEST(GaussLaguerre, RejectsBadSizes) {
  EXPECT_THROW(QuadratureGrid::gauss_laguerre(0), InputError);
  EXPECT_THROW(QuadratureGrid::gauss_laguerre(201), InputError);
  EXPECT_THROW(QuadratureGrid::gauss_laguerre(10, -1.0), InputError);
}

TEST(TruncatedUniform, LayoutAndPolynomialExactness) {
  auto g = QuadratureGrid::truncated_uniform(5.0, 10, 8);
  EXPECT_EQ(g.size(), 80u);
  EXPECT_EQ(g.panel_count(), 10u);
  EXPECT_DOUBLE_EQ(g.panel_width(), 0.5);
  EXPECT_GT(g.nodes().front(), 0.0);
  EXPECT_LT(g.nodes().back(), 5.0);
  std::vector<double> v;
  for (double s : g.nodes()) v.push_back(std::pow(s, 7));
  EXPECT_NEAR(g.integrate(v), std::pow(5.0, 8) / 8.0, 1e-8);
}

TEST(TruncatedUniform, RejectsBadParameters) {
  EXPECT_THROW(QuadratureGrid::truncated_uniform(0.0, 4), InputError);
  EXPECT_THROW(QuadratureGrid::truncated_uniform(1.0, 0), InputError);
  EXPECT_THROW(QuadratureGrid::truncated_uniform(std::nan(""), 4), InputError);
}

TEST(Differentiation, PanelDerivativeOfSine) {
  auto g = QuadratureGrid::truncated_uniform(6.0, 24, 16);
  std::vector<complex> f;
  for (double s : g.nodes()) f.emplace_back(std::sin(s), std::cos(2 * s));
  auto d = differentiate(g, f);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double s = g.nodes()[i];
    worst = std::max(worst, std::abs(d.values[i] - complex(std::cos(s), -2 * std::sin(2 * s))));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Differentiation, LaguerreWeightedDerivative) {
  auto g = QuadratureGrid::gauss_laguerre(40);
  std::vector<complex> f;
  for (double s : g.nodes()) f.emplace_back(s * std::exp(-s));
  auto d = differentiate(g, f);
  for (std::size_t i = 0; i < 20; ++i) {
    const double s = g.nodes()[i];
    EXPECT_NEAR(d.values[i].real(), (1 - s) * std::exp(-s), 1e-8) << s;
  }
}

TEST(Differentiation, CentralDifferenceIsFourthOrder) {
  auto err = [](double h) {
    std::vector<complex> f;
    for (int j = 0; j <= static_cast<int>(std::round(2.0 / h)); ++j) f.emplace_back(std::exp(j * h));
    auto d = central_difference(h, f);
    double e = 0.0;
    for (std::size_t j = d.boundary_rows; j + d.boundary_rows < f.size(); ++j)
      e = std::max(e, std::abs(d.values[j] - f[j]));
    return e;
  };
  const double ratio = err(0.02) / err(0.01);
  EXPECT_GT(ratio, 12.0);
  EXPECT_LT(ratio, 20.0);
  EXPECT_THROW(central_difference(0.1, std::vector<complex>(4)), InputError);
}

TEST(Differentiation, BoundaryValueExtrapolation) {
  auto g = QuadratureGrid::truncated_uniform(10.0, 40, 16);
  std::vector<complex> f;
  for (double s : g.nodes()) f.emplace_back(std::exp(-s), s);
  const complex b = boundary_value(g, f);
  EXPECT_NEAR(b.real(), 1.0, 1e-6);
  EXPECT_NEAR(b.imag(), 0.0, 1e-12);
}

TEST(GaussLegendre, WeightsSumToTwo) {
  std::vector<double> x, w;
  gauss_legendre(12, x, w);
  double s = 0.0;
  for (double v : w) s += v;
  EXPECT_NEAR(s, 2.0, 1e-14);
  EXPECT_NEAR(x[0], -x[11], 1e-15);
}
