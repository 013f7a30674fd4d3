#include "hftlab/profiles.hpp"

#include <cmath>

#include "hftlab/errors.hpp"

namespace hftlab {

const std::vector<Profile>& decaying_suite() {
  static const std::vector<Profile> suite = {
      {"exp", "exp(-s)", [](double s) { return complex(std::exp(-s)); }},
      {"sexp", "s*exp(-s)", [](double s) { return complex(s * std::exp(-s)); }},
      {"gauss", "exp(-(s-3)^2)", [](double s) { return complex(std::exp(-(s - 3.0) * (s - 3.0))); }},
      {"s2exp", "s^2*exp(-s/2)", [](double s) { return complex(s * s * std::exp(-0.5 * s)); }},
  };
  return suite;
}

const Profile& profile_by_name(std::string_view name) {
  static const Profile inv1p{"inv1p", "1/(1+s)", [](double s) { return complex(1.0 / (1.0 + s)); }};
  for (const auto& p : decaying_suite())
    if (p.name == name) return p;
  if (name == inv1p.name) return inv1p;
  throw InputError("unknown profile '" + std::string(name) + "' (expected exp, sexp, gauss, s2exp, inv1p)");
}

QuadratureGrid default_source_grid() { return QuadratureGrid::truncated_uniform(80.0, 320, 20); }

}  // namespace hftlab
