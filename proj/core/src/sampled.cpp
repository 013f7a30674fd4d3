#include "hftlab/sampled.hpp"

#include <algorithm>
#include <cmath>

#include "hftlab/errors.hpp"

namespace hftlab {

namespace {

void require_finite(const std::vector<complex>& values, const char* who) {
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InputError(std::string(who) + ": NaN or Inf in sampled values");
}

void require_hbar(double hbar, const char* who) {
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw InputError(std::string(who) + ": hbar must be positive and finite");
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x_) || !std::isfinite(y_)) throw InputError("HalfPlanePoint: non-finite coordinate");
  if (!(y_ > 0.0)) throw DomainError("HalfPlanePoint: Im z must be strictly positive");
}

SampledHalfLineFunction::SampledHalfLineFunction(QuadratureGrid grid, std::vector<complex> values,
                                                 double hbar)
    : grid_(std::move(grid)), values_(std::move(values)), hbar_(hbar) {
  if (values_.size() != grid_.size())
    throw InputError("SampledHalfLineFunction: value count does not match grid");
  require_finite(values_, "SampledHalfLineFunction");
  require_hbar(hbar_, "SampledHalfLineFunction");
}

SampledHalfLineFunction SampledHalfLineFunction::sample(const QuadratureGrid& grid,
                                                        const std::function<complex(double)>& f,
                                                        double hbar) {
  std::vector<complex> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid.nodes()[i]);
  return {grid, std::move(v), hbar};
}

SampledHalfLineFunction SampledHalfLineFunction::zero(const QuadratureGrid& grid, double hbar) {
  return {grid, std::vector<complex>(grid.size()), hbar};
}

double SampledHalfLineFunction::norm_sq() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += grid_.weights()[i] * std::norm(values_[i]);
  return acc;
}

bool SampledHalfLineFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](complex v) { return v == complex{}; });
}

HardyLineSample::HardyLineSample(double y, std::vector<double> x_nodes, std::vector<complex> values,
                                 double hbar)
    : y_(y), x_(std::move(x_nodes)), values_(std::move(values)), hbar_(hbar) {
  if (!(y_ > 0.0) || !std::isfinite(y_)) throw DomainError("HardyLineSample: y must be positive");
  if (x_.size() != values_.size()) throw InputError("HardyLineSample: node/value count mismatch");
  if (x_.size() < 2) throw InputError("HardyLineSample: need at least two nodes");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1])) throw InputError("HardyLineSample: x nodes must be strictly increasing");
  require_finite(values_, "HardyLineSample");
  require_hbar(hbar_, "HardyLineSample");
}

std::vector<double> HardyLineSample::trapezoid_weights() const {
  const std::size_t n = x_.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = 0.5 * (x_[i + 1] - x_[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

double HardyLineSample::uniform_spacing() const {
  const double h = (x_.back() - x_.front()) / static_cast<double>(x_.size() - 1);
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (std::abs((x_[i] - x_[i - 1]) - h) > 1e-9 * h) return 0.0;
  return h;
}

double HardyLineSample::line_norm_sq() const {
  const auto w = trapezoid_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += w[i] * std::norm(values_[i]);
  return acc;
}

bool HardyLineSample::same_sampling(const HardyLineSample& other) const {
  return y_ == other.y_ && hbar_ == other.hbar_ && x_ == other.x_;
}

bool HardyLineSample::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](complex v) { return v == complex{}; });
}

complex inner_product(const SampledHalfLineFunction& f, const SampledHalfLineFunction& g) {
  if (!(f.grid() == g.grid())) throw InputError("inner_product: grids differ");
  complex acc{};
  const auto& w = f.grid().weights();
  for (std::size_t i = 0; i < f.size(); ++i) acc += w[i] * std::conj(f.values()[i]) * g.values()[i];
  return acc;
}

double relative_distance(const SampledHalfLineFunction& a, const SampledHalfLineFunction& b) {
  if (!(a.grid() == b.grid())) throw InputError("relative_distance: grids differ");
  double num = 0.0, den = 0.0;
  const auto& w = a.grid().weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += w[i] * std::norm(a.values()[i] - b.values()[i]);
    den += w[i] * std::norm(b.values()[i]);
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

std::vector<double> uniform_nodes(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) throw InputError("uniform_nodes: need n >= 2 and hi > lo");
  std::vector<double> x(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + h * static_cast<double>(i);
  x.back() = hi;
  return x;
}

}  // namespace hftlab
