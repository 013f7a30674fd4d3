// Randomized property checks. Seeds are fixed so failures reproduce.
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hftlab/hft.hpp"
#include "hftlab/mobius.hpp"
#include "hftlab/operators.hpp"
#include "hftlab/profiles.hpp"
#include "hftlab/transform.hpp"

using namespace hftlab;

namespace {

MobiusTransform random_sl2(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const double a = n(rng), b = n(rng), c = n(rng);
    if (std::abs(a) < 0.1) continue;
    return MobiusTransform(a, b, c, (1.0 + b * c) / a);
  }
}

complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

SampledHalfLineFunction sample(const std::string& name) {
  return SampledHalfLineFunction::sample(default_source_grid(), profile_by_name(name).f);
}

}  // namespace

TEST(MobiusProperty, UpperHalfPlanePreserved) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> x(-50.0, 50.0), logy(-6.0, 3.0);
  for (int k = 0; k < 10000; ++k) {
    const auto m = random_sl2(rng);
    const HalfPlanePoint z(x(rng), std::pow(10.0, logy(rng)));
    const auto w = mobius_apply(m, z);
    ASSERT_GT(w.y, 0.0) << m.to_string();
    // Im w = Im z / |cz + d|^2
    ASSERT_NEAR(w.y / (z.y / std::norm(m.c() * z.z() + m.d())), 1.0, 1e-9);
  }
}

TEST(MobiusProperty, GroupLaws) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 500; ++k) {
    const auto a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
    const auto left = mobius_compose(mobius_compose(a, b), c);
    const auto right = mobius_compose(a, mobius_compose(b, c));
    const double scale = std::max({std::abs(left.a()), std::abs(left.b()), std::abs(left.c()), std::abs(left.d()), 1.0});
    ASSERT_TRUE(left.approx_equal(right, 1e-12 * scale * scale)) << left.to_string() << " vs " << right.to_string();
    ASSERT_TRUE(mobius_compose(a, mobius_inverse(a)).approx_equal(MobiusTransform::identity(), 1e-12 * scale));
    ASSERT_TRUE(mobius_compose(MobiusTransform::identity(), a).approx_equal(a));
    ASSERT_NEAR(left.determinant(), 1.0, 1e-12 * scale * scale);
  }
}

TEST(MobiusProperty, ActionIsHomomorphism) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_sl2(rng), b = random_sl2(rng);
    const HalfPlanePoint z(0.3, 1.1);
    const auto lhs = mobius_apply(mobius_compose(a, b), z);
    const auto rhs = mobius_apply(a, mobius_apply(b, z));
    ASSERT_LT(std::abs(lhs.z() - rhs.z()), 1e-9 * (1.0 + std::abs(lhs.z())));
  }
}

TEST(InnerProductProperty, Sesquilinear) {
  std::mt19937_64 rng(21);
  const auto f = sample("exp"), g = sample("sexp"), h = sample("gauss");
  for (int k = 0; k < 50; ++k) {
    const complex a = random_complex(rng), b = random_complex(rng);
    std::vector<complex> combo(g.size());
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = a * g.values()[i] + b * h.values()[i];
    const auto gh = g.with_values(combo);
    // linear in the second slot
    EXPECT_LT(std::abs(inner_product(f, gh) - (a * inner_product(f, g) + b * inner_product(f, h))), 1e-13);
    // conjugate-linear in the first slot
    EXPECT_LT(std::abs(inner_product(gh, f) - (std::conj(a) * inner_product(g, f) + std::conj(b) * inner_product(h, f))),
              1e-13);
    EXPECT_LT(std::abs(inner_product(f, gh) - std::conj(inner_product(gh, f))), 1e-14);
  }
}

TEST(InnerProductProperty, PolarizationMatchesQuadrature) {
  std::mt19937_64 rng(22);
  const auto x = default_line_nodes();
  const auto f = sample("exp"), g = sample("s2exp");
  for (int k = 0; k < 3; ++k) {
    const complex a = random_complex(rng);
    std::vector<complex> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * g.values()[i];
    const auto ag = g.with_values(v);
    const complex expected = inner_product(f, ag);
    // y = 0.5: the reconstruction window (0, 24] holds all of s^2 e^(-s/2) that matters at 1e-6.
    const complex got = polarization_inner_product(sample_line(f, 0.5, x), sample_line(ag, 0.5, x));
    EXPECT_LT(std::abs(got - expected), 1e-6 * std::abs(expected));
  }
}

TEST(ForwardProperty, Linear) {
  std::mt19937_64 rng(23);
  const auto f = sample("exp"), g = sample("gauss");
  for (int k = 0; k < 100; ++k) {
    const complex a = random_complex(rng);
    std::vector<complex> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i] + a * g.values()[i];
    const HalfPlanePoint z(std::uniform_real_distribution<double>(-5, 5)(rng),
                           std::uniform_real_distribution<double>(0.05, 3)(rng));
    const complex lhs = forward_hft(f.with_values(v), z);
    const complex rhs = forward_hft(f, z) + a * forward_hft(g, z);
    ASSERT_LT(std::abs(lhs - rhs), 1e-14 * (1.0 + std::abs(lhs)));
  }
}

TEST(ForwardProperty, SupOverLinesIsMonotone) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  const auto f = sample("s2exp");
  for (int k = 0; k < 200; ++k) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    ASSERT_GT(line_norm_sq(f, a), line_norm_sq(f, b));
  }
}

TEST(CommutatorProperty, RandomCombinationsInDomain) {
  std::mt19937_64 rng(25);
  const auto g = sample("sexp"), h = sample("s2exp");
  for (int k = 0; k < 10; ++k) {
    const complex a = random_complex(rng), b = random_complex(rng);
    std::vector<complex> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * g.values()[i] + b * h.values()[i];
    EXPECT_LT(commutator_residual(g.with_values(v), Representation::s_representation).residual, 1e-6);
  }
}

TEST(TransformProperty, RandomDilationsUnitaryAndCanonical) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> loglam(-1.0, 1.0);
  const auto f = sample("sexp");
  for (int k = 0; k < 10; ++k) {
    const double lam = std::pow(10.0, loglam(rng));
    const auto p = transform_hft_pair(MobiusTransform::dilation(lam), f);
    EXPECT_NEAR(p.f_tilde().norm_sq() / f.norm_sq(), 1.0, 1e-12) << lam;
    EXPECT_LT(p.commutator_residual(), 1e-6) << lam;
  }
}
