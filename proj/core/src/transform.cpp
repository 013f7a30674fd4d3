#include "hftlab/transform.hpp"

#include <algorithm>
#include <cmath>

#include "hftlab/errors.hpp"
#include "hftlab/operators.hpp"

namespace hftlab {

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::identity:
      return "identity";
    case TransformKind::dilation:
      return "dilation";
    case TransformKind::translation:
      return "translation";
    case TransformKind::inversion:
      return "inversion";
  }
  return "?";
}

TransformKind classify_transform(const MobiusTransform& m, double tol) {
  if (m.approx_equal(MobiusTransform::identity(), tol)) return TransformKind::identity;
  if (std::abs(m.b()) <= tol && std::abs(m.c()) <= tol) return TransformKind::dilation;
  if (std::abs(m.c()) <= tol && std::abs(m.a() - 1.0) <= tol && std::abs(m.d() - 1.0) <= tol)
    return TransformKind::translation;
  if (m.approx_equal(MobiusTransform::inversion(), tol)) return TransformKind::inversion;
  throw UnsupportedTransformError(
      "transform_hft_pair: only dilations, translations and the inversion keep a half-line "
      "conjugate variable; general Mobius maps have no pull-back rule for f here (m = " +
      m.to_string() + ")");
}

TransformedPair::TransformedPair(MobiusTransform m, TransformKind kind, SampledHalfLineFunction f_tilde,
                                 double z_shift, double scale, int commutator_sign)
    : m_(m), kind_(kind), f_(std::move(f_tilde)), z_shift_(z_shift), scale_(scale), sign_(commutator_sign) {}

SampledHalfLineFunction TransformedPair::apply_S_tilde(const SampledHalfLineFunction& g) const {
  return apply_S(g);
}

SampledHalfLineFunction TransformedPair::apply_Z_tilde(const SampledHalfLineFunction& g) const {
  auto zg = apply_Z(g);
  if (sign_ > 0) return zg;
  std::vector<complex> v = zg.values();
  for (auto& x : v) x = -x;
  return g.with_values(std::move(v));
}

double TransformedPair::commutator_residual() const {
  if (f_.is_zero()) return 0.0;
  const auto zs = apply_Z_tilde(apply_S_tilde(f_));
  const auto sz = apply_S_tilde(apply_Z_tilde(f_));
  const auto& w = f_.grid().weights();
  const complex target(0.0, sign_ * f_.hbar());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f_.size(); ++i) {
    num += w[i] * std::norm(zs.values()[i] - sz.values()[i] - target * f_.values()[i]);
    den += w[i] * std::norm(f_.values()[i]);
  }
  return std::sqrt(num / den);
}

std::vector<double> TransformedPair::s_tilde_spectrum() const {
  const auto ones = f_.with_values(std::vector<complex>(f_.size(), complex(1.0)));
  const auto s = apply_S_tilde(ones);
  std::vector<double> ev(s.size());
  for (std::size_t i = 0; i < ev.size(); ++i) ev[i] = s.values()[i].real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

namespace {

// Same rule as `grid`, with nodes and weights divided by lambda.
QuadratureGrid rescaled(const QuadratureGrid& grid, double lambda) {
  if (grid.scheme() == QuadratureScheme::gauss_laguerre)
    return QuadratureGrid::gauss_laguerre(grid.size(), grid.scale() * lambda);
  return QuadratureGrid::truncated_uniform(grid.length() / lambda, grid.panel_count(), grid.panel_order());
}

}  // namespace

TransformedPair transform_hft_pair(const MobiusTransform& m, const SampledHalfLineFunction& f) {
  const TransformKind kind = classify_transform(m);
  const double hbar = f.hbar();
  switch (kind) {
    case TransformKind::identity:
      return {m, kind, f, 0.0, 1.0, +1};
    case TransformKind::dilation: {
      const double lambda = m.a() / m.d();
      const double root = std::sqrt(lambda);
      std::vector<complex> v(f.values());
      for (auto& x : v) x *= root;
      return {m, kind, SampledHalfLineFunction(rescaled(f.grid(), lambda), std::move(v), hbar), 0.0, lambda, +1};
    }
    case TransformKind::translation: {
      const double k = m.b();
      std::vector<complex> v(f.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = std::polar(1.0, -k * f.grid().nodes()[i] / hbar) * f.values()[i];
      return {m, kind, f.with_values(std::move(v)), k, 1.0, +1};
    }
    case TransformKind::inversion:
      return {m, kind, f, 0.0, 1.0, -1};
  }
  throw UnsupportedTransformError("transform_hft_pair: unsupported transform");
}

}  // namespace hftlab
