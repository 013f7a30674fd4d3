#include "hftlab/physics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hftlab/differentiation.hpp"
#include "hftlab/errors.hpp"
#include "hftlab/hft.hpp"
#include "hftlab/operators.hpp"

namespace hftlab {

void FreeParticleConfig::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InputError("free particle: mass must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InputError("free particle: hbar must be positive");
  if (!std::isfinite(momentum)) throw InputError("free particle: momentum must be finite");
}

SampledHalfLineFunction time_eigenfunction(double t_prime, const QuadratureGrid& energy_grid, double hbar) {
  if (!std::isfinite(t_prime)) throw InputError("time_eigenfunction: t' must be finite");
  return SampledHalfLineFunction::sample(
      energy_grid, [&](double e) { return std::polar(1.0, -e * t_prime / hbar); }, hbar);
}

double time_eigen_residual(const SampledHalfLineFunction& f, double t_prime) {
  const auto zf = apply_Z(f);
  const auto& w = f.grid().weights();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num += w[i] * std::norm(zf.values()[i] - t_prime * f.values()[i]);
    den += w[i] * std::norm(f.values()[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

SampledHalfLineFunction smeared_energy_eigenfunction(double e_prime, double sigma, const QuadratureGrid& grid,
                                                     double hbar) {
  if (!(sigma > 0.0)) throw InputError("smeared_energy_eigenfunction: sigma must be positive");
  if (!(e_prime - 4.0 * sigma > 0.0))
    throw PreconditionError("smeared_energy_eigenfunction: E' - 4 sigma must be positive so the Gaussian stays in (0, inf)");
  const double c = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  auto f = SampledHalfLineFunction::sample(
      grid, [&](double e) { return complex(c * std::exp(-0.5 * std::pow((e - e_prime) / sigma, 2))); }, hbar);
  const complex mass = grid.integrate(f.values());
  if (std::abs(mass.real() - 1.0) > 1e-3)
    throw PreconditionError("smeared_energy_eigenfunction: grid does not contain the Gaussian mass");
  std::vector<complex> v = f.values();
  for (auto& x : v) x /= mass.real();
  return f.with_values(std::move(v));
}

QuadratureGrid default_energy_grid(double e_prime, double sigma) {
  const double length = e_prime + 12.0 * sigma + 1.0;
  const auto panels = static_cast<std::size_t>(std::ceil(length / (0.5 * sigma)));
  return QuadratureGrid::truncated_uniform(length, panels, 12);
}

namespace {

std::vector<double> unwrap(const std::vector<complex>& v) {
  std::vector<double> phase(v.size());
  double offset = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double raw = std::arg(v[j]);
    if (j > 0) {
      double step = raw + offset - phase[j - 1];
      while (step > std::numbers::pi) {
        offset -= 2.0 * std::numbers::pi;
        step -= 2.0 * std::numbers::pi;
      }
      while (step < -std::numbers::pi) {
        offset += 2.0 * std::numbers::pi;
        step += 2.0 * std::numbers::pi;
      }
    }
    phase[j] = raw + offset;
  }
  return phase;
}

double fitted_slope(const std::vector<double>& t, const std::vector<double>& p) {
  const double n = static_cast<double>(t.size());
  double st = 0, sp = 0, stt = 0, stp = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    st += t[j];
    sp += p[j];
    stt += t[j] * t[j];
    stp += t[j] * p[j];
  }
  return (n * stp - st * sp) / (n * stt - st * st);
}

}  // namespace

TimeRepresentation time_representation(double e_prime, double sigma, const std::vector<double>& t_nodes,
                                       double y_line, double hbar) {
  if (t_nodes.size() < 2) throw InputError("time_representation: need at least two t nodes");
  if (!(y_line > 0.0)) throw DomainError("time_representation: y must be positive");
  TimeRepresentation out{HardyLineSample(y_line, t_nodes, std::vector<complex>(t_nodes.size(), complex(1.0)), hbar),
                         {}, 0.0, 0.0, false};
  if (e_prime == 0.0) {
    // delta(E) at the edge of the spectrum: phi = (2 pi hbar)^(-1/2), flat phase.
    out.sample = HardyLineSample(
        y_line, t_nodes, std::vector<complex>(t_nodes.size(), complex(1.0 / std::sqrt(2.0 * std::numbers::pi * hbar))),
        hbar);
    out.limit_case = true;
  } else {
    const auto f = smeared_energy_eigenfunction(e_prime, sigma, default_energy_grid(e_prime, sigma), hbar);
    out.sample = sample_line(f, y_line, t_nodes);
  }
  out.unwrapped_phase = unwrap(out.sample.values());
  out.phase_slope = fitted_slope(t_nodes, out.unwrapped_phase);
  for (std::size_t j = 0; j < t_nodes.size(); ++j) {
    const double expected = e_prime * (t_nodes[j] - t_nodes[0]) / hbar;
    out.phase_error = std::max(out.phase_error,
                               std::abs(out.unwrapped_phase[j] - out.unwrapped_phase[0] - expected));
  }
  return out;
}

double schrodinger_residual(double e_prime, const std::vector<double>& t_nodes, double hbar, int sign) {
  if (t_nodes.size() < 5) throw InputError("schrodinger_residual: need at least 5 t nodes");
  if (sign != 1 && sign != -1) throw InputError("schrodinger_residual: sign must be +1 or -1");
  std::vector<complex> phi(t_nodes.size());
  for (std::size_t j = 0; j < phi.size(); ++j) phi[j] = std::polar(1.0, e_prime * t_nodes[j] / hbar);
  const HardyLineSample sample(1.0, t_nodes, phi, hbar);  // only the nodes matter here
  const double h = sample.uniform_spacing();
  if (h == 0.0) throw InputError("schrodinger_residual: t nodes must be uniform");
  const auto d = central_difference(h, phi);
  double num = 0.0, den = 0.0;
  for (std::size_t j = d.boundary_rows; j + d.boundary_rows < phi.size(); ++j) {
    const complex r = static_cast<double>(sign) * complex(0.0, hbar) * d.values[j] - e_prime * phi[j];
    num += std::norm(r);
    den += std::norm(phi[j]);
  }
  return std::sqrt(num / den);
}

FreeParticleMap free_particle_map(const FreeParticleConfig& cfg) {
  cfg.validate();
  FreeParticleMap m;
  m.energy = cfg.momentum * cfg.momentum / (2.0 * cfg.mass);
  auto wave = [&](double p) {
    std::ostringstream os;
    os.precision(15);
    os << "exp(" << (p < 0 ? "-" : "+") << "i*" << std::abs(p) << "*x/hbar)";
    return PlaneWave{p, os.str()};
  };
  if (cfg.momentum == 0.0) {
    m.eigenfunctions.push_back({0.0, "1"});
  } else {
    const double p = std::abs(cfg.momentum);
    m.eigenfunctions.push_back(wave(p));
    m.eigenfunctions.push_back(wave(-p));
  }
  m.positive_time_branch = "T_sqrt = +sqrt(T^2_F): spectrum [0, inf)";
  m.negative_time_branch = "inversion-transformed T~_sqrt: spectrum (-inf, 0]";
  return m;
}

}  // namespace hftlab
