#include "hftlab/hft.hpp"
#include "hftlab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "hftlab/errors.hpp"

namespace hftlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double prefactor(double hbar) { return 1.0 / std::sqrt(two_pi * hbar); }

// w_i f_i exp(-s_i y / hbar) / sqrt(2 pi hbar)
std::vector<complex> damped_amplitudes(const SampledHalfLineFunction& f, double y) {
  const auto& s = f.grid().nodes();
  const auto& w = f.grid().weights();
  const double c = prefactor(f.hbar());
  std::vector<complex> a(f.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = c * w[i] * f.values()[i] * std::exp(-s[i] * y / f.hbar());
  return a;
}

}  // namespace

complex forward_hft(const SampledHalfLineFunction& f, const HalfPlanePoint& z) {
  return forward_hft_estimate(f, z).value;
}

ForwardEstimate forward_hft_estimate(const SampledHalfLineFunction& f, const HalfPlanePoint& z) {
  const auto a = damped_amplitudes(f, z.y);
  const auto& s = f.grid().nodes();
  const double omega = z.x / f.hbar();

  ForwardEstimate out;
  double amax = 0.0;
  for (const auto& ai : a) amax = std::max(amax, std::abs(ai));
  double max_gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != complex{}) out.value += a[i] * std::polar(1.0, s[i] * omega);
    if (i > 0 && std::abs(a[i]) > 1e-16 * amax) max_gap = std::max(max_gap, s[i] - s[i - 1]);
  }
  out.resolved = std::abs(omega) * max_gap <= 1.0;

  if (f.grid().scheme() == QuadratureScheme::truncated_uniform) {
    const double s_end = f.grid().length();
    out.tail_bound = prefactor(f.hbar()) * std::abs(f.values().back()) *
                     std::exp(-s_end * z.y / f.hbar()) * f.hbar() / z.y;
  }
  return out;
}

HardyLineSample sample_line(const SampledHalfLineFunction& f, double y,
                            const std::vector<double>& x_nodes) {
  if (!(y > 0.0)) throw DomainError("sample_line: y must be positive");
  if (x_nodes.size() < 2) throw InputError("sample_line: need at least two x nodes");
  const auto a = damped_amplitudes(f, y);
  const auto& s = f.grid().nodes();
  const double hbar = f.hbar();
  const std::size_t nx = x_nodes.size();
  std::vector<complex> out(nx);

  const double dx = (x_nodes.back() - x_nodes.front()) / static_cast<double>(nx - 1);
  bool uniform = true;
  for (std::size_t j = 1; j < nx && uniform; ++j)
    uniform = std::abs((x_nodes[j] - x_nodes[j - 1]) - dx) <= 1e-12 * std::max(1.0, std::abs(dx));

  constexpr std::size_t resync = 32;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == complex{}) continue;
    const double k = s[i] / hbar;
    if (uniform) {
      const complex step = std::polar(1.0, k * dx);
      complex cur;
      for (std::size_t j = 0; j < nx; ++j) {
        if (j % resync == 0) cur = a[i] * std::polar(1.0, k * x_nodes[j]);
        out[j] += cur;
        cur *= step;
      }
    } else {
      for (std::size_t j = 0; j < nx; ++j) out[j] += a[i] * std::polar(1.0, k * x_nodes[j]);
    }
  }
  return {y, x_nodes, std::move(out), hbar};
}

std::vector<double> default_line_nodes(double hbar) {
  return uniform_nodes(-40.0 * hbar, 40.0 * hbar, 2001);
}

QuadratureGrid default_target_grid(const HardyLineSample& phi) {
  const double hbar = phi.hbar();
  double dx = phi.uniform_spacing();
  if (dx == 0.0) {
    dx = 0.0;
    for (std::size_t i = 1; i < phi.size(); ++i)
      dx = std::max(dx, phi.x_nodes()[i] - phi.x_nodes()[i - 1]);
  }
  double length = std::min({12.0 * hbar / phi.y(), 0.8 * std::numbers::pi * hbar / dx, 60.0});
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(length / 0.25)));
  return QuadratureGrid::truncated_uniform(length, panels, 16);
}

InverseResult inverse_hft(const HardyLineSample& phi, const QuadratureGrid& target_grid,
                          const InverseOptions& options) {
  const double hbar = phi.hbar();
  const double y = phi.y();
  const auto& s = target_grid.nodes();
  const double s_max = s.back();
  if (s_max * y / hbar > options.amplification_guard)
    throw RangeError("inverse_hft: s*y/hbar = " + std::to_string(s_max * y / hbar) +
                     " exceeds the amplification guard " +
                     std::to_string(options.amplification_guard));
  if (phi.is_zero()) return {SampledHalfLineFunction::zero(target_grid, hbar), 0.0, 0};

  const auto& x = phi.x_nodes();
  const auto& v = phi.values();
  const std::size_t nx = x.size();

  // Tail model on the outer parts of the window.
  const double lo = x.front(), hi = x.back();
  const double span = hi - lo;
  std::vector<std::size_t> fit_rows;
  for (std::size_t j = 0; j < nx; ++j)
    if (x[j] <= lo + options.fit_fraction * span || x[j] >= hi - options.fit_fraction * span)
      fit_rows.push_back(j);
  int terms = std::max(0, options.model_terms);
  terms = std::min<int>(terms, static_cast<int>(fit_rows.size() / 4));

  auto model = [&](complex z, int k) { return std::pow(complex(1.0, 0.0) - complex(0.0, 1.0) * z / hbar, -k); };

  Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(terms);
  if (terms > 0) {
    const auto m = static_cast<Eigen::Index>(fit_rows.size());
    Eigen::MatrixXcd A(m, terms);
    Eigen::VectorXcd b(m);
    for (Eigen::Index r = 0; r < m; ++r) {
      const complex z(x[fit_rows[r]], y);
      for (int k = 0; k < terms; ++k) A(r, k) = model(z, k + 1);
      b(r) = v[fit_rows[r]];
    }
    Eigen::VectorXd scale(terms);
    for (int k = 0; k < terms; ++k) {
      scale(k) = A.col(k).norm();
      if (scale(k) > 0.0) A.col(k) /= scale(k);
    }
    coef = A.colPivHouseholderQr().solve(b);
    for (int k = 0; k < terms; ++k)
      if (scale(k) > 0.0) coef(k) /= scale(k);
  }

  std::vector<complex> remainder(nx);
  for (std::size_t j = 0; j < nx; ++j) {
    complex model_value{};
    for (int k = 0; k < terms; ++k) model_value += coef(k) * model(complex(x[j], y), k + 1);
    remainder[j] = v[j] - model_value;
  }

  const auto tau = phi.trapezoid_weights();
  const double c = prefactor(hbar);
  const double root = std::sqrt(two_pi * hbar);
  std::vector<complex> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double k = s[i] / hbar;
    complex acc{};
    for (std::size_t j = 0; j < nx; ++j) acc += tau[j] * remainder[j] * std::polar(1.0, -k * x[j]);
    complex model_part{};
    double power = 1.0;  // s^(k-1) / (k-1)!
    for (int m = 0; m < terms; ++m) {
      model_part += coef(m) * power;
      power *= s[i] / static_cast<double>(m + 1);
    }
    out[i] = c * std::exp(s[i] * y / hbar) * acc + root * std::exp(-s[i]) * model_part;
  }

  SampledHalfLineFunction f(target_grid, std::move(out), hbar);

  // Integrand left outside the window, treated as decaying no faster than 1/|x|.
  const double edge = std::max(std::abs(remainder.front()), std::abs(remainder.back()));
  const double tail = edge * std::max(std::abs(lo), std::abs(hi));
  double err_sq = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = c * tail * std::exp(s[i] * y / hbar);
    err_sq += target_grid.weights()[i] * e * e;
  }
  const double norm = std::sqrt(f.norm_sq());
  const double estimate = norm > 0.0 ? std::sqrt(err_sq) / norm : 0.0;
  if (estimate > options.tolerance)
    throw TruncationError("inverse_hft: truncation-tail estimate " + std::to_string(estimate) +
                              " exceeds tolerance " + std::to_string(options.tolerance),
                          estimate);
  return {std::move(f), estimate, terms};
}

double line_norm_sq(const SampledHalfLineFunction& f, double y) {
  if (!(y > 0.0)) throw DomainError("line_norm_sq: y must be positive");
  const auto& s = f.grid().nodes();
  const auto& w = f.grid().weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    acc += w[i] * std::norm(f.values()[i]) * std::exp(-2.0 * s[i] * y / f.hbar());
  return acc;
}

SupNormResult hardy_sup_norm(const SampledHalfLineFunction& f, std::vector<double> y_probes) {
  if (y_probes.empty()) throw InputError("hardy_sup_norm: probe set is empty");
  std::sort(y_probes.begin(), y_probes.end());
  SupNormResult r;
  r.probes = y_probes;
  for (double y : y_probes) r.line_norms.push_back(line_norm_sq(f, y));
  const auto best = std::max_element(r.line_norms.begin(), r.line_norms.end());
  r.probe_max = *best;
  r.argmax_y = r.probes[static_cast<std::size_t>(best - r.line_norms.begin())];
  const double y0 = r.probes.front();
  r.limit = 3.0 * line_norm_sq(f, y0) - 3.0 * line_norm_sq(f, 2.0 * y0) + line_norm_sq(f, 3.0 * y0);
  r.value = std::max(r.probe_max, r.limit);
  for (std::size_t i = 1; i < r.line_norms.size(); ++i)
    if (!(r.line_norms[i] < r.line_norms[i - 1]) && r.probes[i] > r.probes[i - 1])
      r.strictly_decreasing = false;
  return r;
}

double hardy_norm_sq(const HardyLineSample& phi, const InverseOptions& options,
                     const std::optional<QuadratureGrid>& target) {
  const QuadratureGrid grid = target ? *target : default_target_grid(phi);
  return inverse_hft(phi, grid, options).f.norm_sq();
}

complex polarization_inner_product(const HardyLineSample& phi, const HardyLineSample& psi,
                                   const InverseOptions& options,
                                   const std::optional<QuadratureGrid>& target) {
  if (!phi.same_sampling(psi))
    throw InputError("polarization_inner_product: samples differ in y, hbar or x nodes");
  const QuadratureGrid grid = target ? *target : default_target_grid(phi);
  auto combo = [&](complex a) {
    std::vector<complex> v(phi.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = psi.values()[j] + a * phi.values()[j];
    return hardy_norm_sq(phi.with_values(std::move(v)), options, grid);
  };
  const complex i(0.0, 1.0);
  return 0.25 * (combo(1.0) - combo(-1.0) + i * combo(i) - i * combo(-i));
}

QuadratureGrid roundtrip_target_grid() { return QuadratureGrid::truncated_uniform(5.0, 32, 16); }

RoundtripResult roundtrip(const std::function<complex(double)>& profile, double y, double hbar,
                          const InverseOptions& options) {
  const auto src = SampledHalfLineFunction::sample(default_source_grid(), profile, hbar);
  const auto phi = sample_line(src, y, default_line_nodes(hbar));
  const auto target = roundtrip_target_grid();
  auto inv = inverse_hft(phi, target, options);
  const auto exact = SampledHalfLineFunction::sample(target, profile, hbar);
  const double err = relative_distance(inv.f, exact);
  return RoundtripResult{y, err, inv.tail_estimate, std::move(inv.f)};
}

}  // namespace hftlab
