#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hftlab/sampled.hpp"

namespace hftlab {

/// A named test function on the half line.
struct Profile {
  std::string name;
  std::string formula;
  std::function<complex(double)> f;
};

/// exp, sexp, gauss, s2exp: the decaying-smooth suite
/// {e^-s, s e^-s, e^-(s-3)^2, s^2 e^-s/2}.
const std::vector<Profile>& decaying_suite();

/// Suite members plus `inv1p` = 1/(1+s), which is slowly decaying.
const Profile& profile_by_name(std::string_view name);

/// Grid on which suite profiles are sampled for forward transforms: (0, 80] with
/// 320 panels of 20 Gauss-Legendre nodes. Fine enough to resolve exp(i s x / hbar)
/// for |x| / hbar up to about 40.
QuadratureGrid default_source_grid();

}  // namespace hftlab
