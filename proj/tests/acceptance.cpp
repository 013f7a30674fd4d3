// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hftlab/deficiency.hpp"
#include "hftlab/friedrichs.hpp"
#include "hftlab/hft.hpp"
#include "hftlab/mobius.hpp"
#include "hftlab/operators.hpp"
#include "hftlab/physics.hpp"
#include "hftlab/profiles.hpp"
#include "hftlab/transform.hpp"

using namespace hftlab;

namespace {

const double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

char buf[512];

template <class... A>
std::string fmt(const char* f, A... a) {
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

SampledHalfLineFunction sample(const Profile& p) {
  return SampledHalfLineFunction::sample(default_source_grid(), p.f);
}

Outcome ac1_roundtrip() {
  Outcome o;
  double worst = 0.0, slowest = 0.0;
  std::size_t nodes = 0;
  for (const auto& p : decaying_suite())
    for (double y : {0.5, 1.0, 2.0}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = roundtrip(p.f, y);
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      worst = std::max(worst, r.relative_error);
      slowest = std::max(slowest, dt);
      nodes = r.reconstructed.size();
    }
  o.pass = worst < 1e-6 && slowest < 1.0 && nodes == 512;
  o.detail = fmt("max rel err %.2e, slowest run %.3f s, N=%zu", worst, slowest, nodes);
  return o;
}

Outcome ac2_line_independence() {
  double worst = 0.0;
  for (const auto& p : decaying_suite())
    worst = std::max(worst, relative_distance(roundtrip(p.f, 0.5).reconstructed, roundtrip(p.f, 2.0).reconstructed));
  return {worst < 1e-6, fmt("max distance y=0.5 vs y=2: %.2e", worst)};
}

Outcome ac3_sup_norm() {
  std::vector<double> probes;
  for (double y = 1e-3; y <= 4.0; y *= 2.0) probes.push_back(y);
  double worst = 0.0;
  bool monotone = true;
  for (const auto& p : decaying_suite()) {
    const auto f = sample(p);
    const auto s = hardy_sup_norm(f, probes);
    worst = std::max(worst, std::abs(s.value - f.norm_sq()) / f.norm_sq());
    monotone = monotone && s.strictly_decreasing;
  }
  return {worst < 1e-4 && monotone, fmt("max |sup - ||f||^2|/||f||^2 = %.2e, strictly decreasing: %s", worst,
                                        monotone ? "yes" : "no")};
}

Outcome ac4_commutator() {
  double s_worst = 0.0, z_worst = 0.0;
  for (const auto& p : decaying_suite()) {
    const auto f = sample(p);
    s_worst = std::max(s_worst, commutator_residual(f, Representation::s_representation).residual);
    z_worst = std::max(z_worst, commutator_residual(f, Representation::z_representation).residual);
  }
  return {s_worst < 1e-6 && z_worst < 1e-6, fmt("s-rep %.2e, z-rep %.2e", s_worst, z_worst)};
}

Outcome ac5_boundary_defect() {
  double z_worst = 0.0, s_worst = 0.0;
  const auto& suite = decaying_suite();
  for (const auto& p : suite)
    for (const auto& q : suite) {
      const auto f = sample(p), g = sample(q);
      // exact boundary values from the closed-form profiles
      const complex expected = complex(0.0, 1.0) * p.f(0.0) * std::conj(q.f(0.0));
      z_worst = std::max(z_worst, std::abs(symmetry_defect(OperatorKind::Z, f, g) - expected));
      s_worst = std::max(s_worst, std::abs(symmetry_defect(OperatorKind::S, f, g)));
    }
  return {z_worst < 1e-6 && s_worst < 1e-8, fmt("Z defect error %.2e, S defect %.2e", z_worst, s_worst)};
}

Outcome ac6_deficiency() {
  const auto w = default_windows();
  const auto s = deficiency_indices(DeficiencyOperator::S, 1.0, w);
  const auto z = deficiency_indices(DeficiencyOperator::Z, 1.0, w);
  const auto z2 = deficiency_indices(DeficiencyOperator::Z_squared, 1.0, w);
  bool traces = s.kernel_candidates.empty();
  for (const auto* r : {&z, &z2})
    for (const auto& c : r->kernel_candidates)
      traces = traces && (c.trace.verdict == (c.L2_member ? TraceVerdict::convergent : TraceVerdict::divergent));
  const bool idx = s.d_plus == 0 && s.d_minus == 0 && z.d_plus == 0 && z.d_minus == 1 && z2.d_plus == 1 &&
                   z2.d_minus == 1;
  return {idx && traces, fmt("S (%d,%d), Z (%d,%d), Z^2 (%d,%d), traces %s", s.d_plus, s.d_minus, z.d_plus,
                             z.d_minus, z2.d_plus, z2.d_minus, traces ? "convergent/divergent" : "ambiguous")};
}

Outcome ac7_friedrichs() {
  const double min_rq = min_rayleigh_quotient(build_friedrichs_Zsq(20.0, 200), 1000, 2024);
  // O(h^2): halving h divides the k-th eigenvalue error by ~4
  double worst_ratio_dev = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const double exact = std::pow(k * pi / 10.0, 2);
    const double e1 = std::abs(decompose(build_friedrichs_Zsq(10.0, 99)).eigenvalues(k - 1) - exact);
    const double e2 = std::abs(decompose(build_friedrichs_Zsq(10.0, 199)).eigenvalues(k - 1) - exact);
    worst_ratio_dev = std::max(worst_ratio_dev, std::abs(e1 / e2 - 4.0));
  }
  std::vector<double> mins;
  for (double L : {10.0, 20.0, 40.0})
    mins.push_back(decompose(build_friedrichs_Zsq(L, static_cast<int>(L / 0.1) - 1)).eigenvalues(0));
  const bool shrinking = mins[1] < mins[0] && mins[2] < mins[1] && mins[2] / mins[1] < 0.3;
  return {min_rq >= -1e-12 && worst_ratio_dev < 0.1 && shrinking,
          fmt("min RQ %.2e, |err ratio - 4| <= %.3f, lambda_min %.4g -> %.4g -> %.4g", min_rq, worst_ratio_dev,
              mins[0], mins[1], mins[2])};
}

Outcome ac8_sqrt() {
  const auto op = build_friedrichs_Zsq(20.0, 400);
  const auto root = sqrt_friedrichs(op);
  const double cons = root_consistency(root, op.dense());
  const double min_root = root.root_eigenvalues.minCoeff();
  const double witness = noncommutation_witness(20.0, 400).value;
  return {cons < 1e-10 && min_root >= 0.0 && witness > 0.1,
          fmt("||R^2 - A||/||A|| %.2e, min root eigenvalue %.3e, witness %.3f", cons, min_root, witness)};
}

Outcome ac9_sl2r() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> n(0.0, 1.0);
  auto random_sl2 = [&] {
    for (;;) {
      const double a = n(rng), b = n(rng), c = n(rng);
      if (std::abs(a) >= 0.1) return MobiusTransform(a, b, c, (1.0 + b * c) / a);
    }
  };
  bool group = true;
  for (int k = 0; k < 200; ++k) {
    const auto a = random_sl2(), b = random_sl2(), c = random_sl2();
    const auto l = mobius_compose(mobius_compose(a, b), c);
    const auto r = mobius_compose(a, mobius_compose(b, c));
    const double sc = std::max({1.0, std::abs(l.a()), std::abs(l.b()), std::abs(l.c()), std::abs(l.d())});
    group = group && l.approx_equal(r, 1e-12 * sc * sc) &&
            mobius_compose(a, mobius_inverse(a)).approx_equal(MobiusTransform::identity(), 1e-12 * sc);
  }
  int violations = 0;
  std::uniform_real_distribution<double> ux(-20.0, 20.0), uy(1e-4, 10.0);
  for (int k = 0; k < 10000; ++k)
    if (!(mobius_apply(random_sl2(), HalfPlanePoint(ux(rng), uy(rng))).y > 0.0)) ++violations;

  const double inf = std::numeric_limits<double>::infinity();
  const bool boundary = boundary_action(MobiusTransform::dilation(3), {0, inf}).to_string() == "(0,inf)" &&
                        boundary_action(MobiusTransform::translation(2), {0, inf}).to_string() == "(2,inf)" &&
                        boundary_action(MobiusTransform::inversion(), {0, inf}).to_string() == "(-inf,0)";

  const auto f = SampledHalfLineFunction::sample(default_source_grid(), profile_by_name("sexp").f);
  double tilde = 0.0;
  for (const auto& m : {MobiusTransform::identity(), MobiusTransform::dilation(2.0), MobiusTransform::dilation(0.5),
                        MobiusTransform::translation(1.5), MobiusTransform::inversion()})
    tilde = std::max(tilde, transform_hft_pair(m, f).commutator_residual());
  return {group && violations == 0 && boundary && tilde < 1e-6,
          fmt("group laws %s, Im violations %d/10000, boundary cases %s, tilde residual %.2e", group ? "ok" : "broken",
              violations, boundary ? "exact" : "wrong", tilde)};
}

Outcome ac10_free_particle() {
  const auto t = uniform_nodes(-5.0, 5.0, 1001);
  const auto rep = time_representation(1.0, 0.05, t);
  const double slope_err = std::abs(rep.phase_slope - 1.0);
  const double schr = schrodinger_residual(1.0, t);
  bool degenerate = true;
  for (double p : {0.1, 1.0, 2.0, 7.5})
    degenerate = degenerate && free_particle_map({1.0, 1.0, p}).energy == free_particle_map({1.0, 1.0, -p}).energy;
  return {slope_err < 1e-2 && schr < 1e-8 && degenerate,
          fmt("|slope - E'/hbar| %.2e, Schrodinger residual %.2e, E_p = E_-p %s", slope_err, schr,
              degenerate ? "exact" : "broken")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 transform roundtrip", ac1_roundtrip},
      {"AC2 line independence", ac2_line_independence},
      {"AC3 Hardy sup norm", ac3_sup_norm},
      {"AC4 Heisenberg commutator", ac4_commutator},
      {"AC5 boundary defect", ac5_boundary_defect},
      {"AC6 deficiency indices", ac6_deficiency},
      {"AC7 Friedrichs extension", ac7_friedrichs},
      {"AC8 square root", ac8_sqrt},
      {"AC9 SL(2,R) action", ac9_sl2r},
      {"AC10 free particle", ac10_free_particle},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
