#include "hftlab/operators.hpp"

#include <cmath>
#include <limits>

#include "hftlab/differentiation.hpp"
#include "hftlab/errors.hpp"
#include "hftlab/hft.hpp"

namespace hftlab {

namespace {

constexpr complex I{0.0, 1.0};

double require_uniform(const HardyLineSample& phi) {
  const double h = phi.uniform_spacing();
  if (h == 0.0) throw InputError("z-representation derivative needs uniform x nodes");
  return h;
}

}  // namespace

std::string_view to_string(Representation rep) {
  return rep == Representation::s_representation ? "s_representation" : "z_representation";
}

SampledHalfLineFunction apply_S(const SampledHalfLineFunction& f) {
  std::vector<complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.grid().nodes()[i] * f.values()[i];
  return f.with_values(std::move(v));
}

SampledHalfLineFunction apply_Z(const SampledHalfLineFunction& f) {
  auto d = differentiate(f.grid(), f.values());
  for (auto& x : d.values) x *= I * f.hbar();
  return f.with_values(std::move(d.values));
}

HardyLineSample apply_S(const HardyLineSample& phi) {
  if (phi.size() < 5) throw InputError("apply_S: z-representation needs at least 5 nodes");
  auto d = central_difference(require_uniform(phi), phi.values());
  for (auto& x : d.values) x *= -I * phi.hbar();
  return phi.with_values(std::move(d.values));
}

HardyLineSample apply_Z(const HardyLineSample& phi) {
  std::vector<complex> v(phi.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = complex(phi.x_nodes()[j], phi.y()) * phi.values()[j];
  return phi.with_values(std::move(v));
}

double commutator_residual(const HardyLineSample& phi) {
  if (phi.size() < 9) throw InputError("commutator_residual: need at least 9 line nodes");
  if (phi.is_zero()) return 0.0;
  const auto zs = apply_Z(apply_S(phi));
  const auto sz = apply_S(apply_Z(phi));
  const auto w = phi.trapezoid_weights();
  double num = 0.0, den = 0.0;
  for (std::size_t j = 2; j + 2 < phi.size(); ++j) {
    const complex r = zs.values()[j] - sz.values()[j] - I * phi.hbar() * phi.values()[j];
    num += w[j] * std::norm(r);
    den += w[j] * std::norm(phi.values()[j]);
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

CommutatorResult commutator_residual(const SampledHalfLineFunction& f, Representation rep,
                                     const LineSpec& line) {
  CommutatorResult out;
  out.domain = domain_membership(f);
  if (!out.domain.contains(OperatorDomain::S) || !out.domain.contains(OperatorDomain::Z_dagger))
    throw DomainPreconditionError("commutator_residual: f is outside D(S) and D(Z_dagger)", out.domain);
  if (f.is_zero()) return out;

  if (rep == Representation::s_representation) {
    const auto zs = apply_Z(apply_S(f));
    const auto sz = apply_S(apply_Z(f));
    const auto& w = f.grid().weights();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const complex r = zs.values()[i] - sz.values()[i] - I * f.hbar() * f.values()[i];
      num += w[i] * std::norm(r);
      den += w[i] * std::norm(f.values()[i]);
    }
    out.residual = std::sqrt(num / den);
    return out;
  }

  const auto nodes = line.x_nodes.empty() ? uniform_nodes(-20.0 * f.hbar(), 20.0 * f.hbar(), 4001)
                                          : line.x_nodes;
  out.residual = commutator_residual(sample_line(f, line.y, nodes));
  return out;
}

complex symmetry_defect(OperatorKind op, const SampledHalfLineFunction& f,
                        const SampledHalfLineFunction& g) {
  if (!(f.grid() == g.grid())) throw InputError("symmetry_defect: functions live on different grids");
  if (f.hbar() != g.hbar()) throw InputError("symmetry_defect: hbar differs");
  if (op == OperatorKind::S)
    return std::conj(inner_product(f, apply_S(g))) - inner_product(g, apply_S(f));
  return std::conj(inner_product(f, apply_Z(g))) - inner_product(g, apply_Z(f));
}

double interior_relative_distance(const HardyLineSample& a, const HardyLineSample& b,
                                  std::size_t skip) {
  if (!a.same_sampling(b)) throw InputError("interior_relative_distance: sampling differs");
  const auto w = a.trapezoid_weights();
  double num = 0.0, den = 0.0;
  for (std::size_t j = skip; j + skip < a.size(); ++j) {
    num += w[j] * std::norm(a.values()[j] - b.values()[j]);
    den += w[j] * std::norm(b.values()[j]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

}  // namespace hftlab
