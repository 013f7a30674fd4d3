#pragma once

#include <string_view>
#include <vector>

#include "hftlab/mobius.hpp"
#include "hftlab/sampled.hpp"

namespace hftlab {

enum class TransformKind { identity, dilation, translation, inversion };

std::string_view to_string(TransformKind kind);

/// Classifies m among the transforms the HFT pair supports; anything else raises
/// UnsupportedTransformError.
TransformKind classify_transform(const MobiusTransform& m, double tol = 1e-12);

/// The HFT pair expressed in the transformed variables (s~, z~).
///
/// dilation z~ = lambda z: s~ = s / lambda, f~(s~) = sqrt(lambda) f(lambda s~) (unitary).
/// translation z~ = z + k: s~ = s, f~(s) = exp(-i k s / hbar) f(s), Z~ = Z + k.
/// inversion: the boundary semiaxis is reversed; the pair is realized as the
/// time-reflected operators S~ = S, Z~ = -Z, whose commutator carries -i hbar.
class TransformedPair {
 public:
  TransformedPair(MobiusTransform m, TransformKind kind, SampledHalfLineFunction f_tilde,
                  double z_shift, double scale, int commutator_sign);

  const MobiusTransform& transform() const noexcept { return m_; }
  TransformKind kind() const noexcept { return kind_; }
  const SampledHalfLineFunction& f_tilde() const noexcept { return f_; }
  /// Ratio s / s~ of the conjugate variables (lambda for dilations, 1 otherwise).
  double scale() const noexcept { return scale_; }
  double z_shift() const noexcept { return z_shift_; }
  /// [Z~, S~] = commutator_sign * i hbar.
  int commutator_sign() const noexcept { return sign_; }

  /// S~ g = s~ g on the tilde grid.
  SampledHalfLineFunction apply_S_tilde(const SampledHalfLineFunction& g) const;
  /// Z~ g = sign * i hbar dg/ds~ (the translation shift acts through f~'s phase).
  SampledHalfLineFunction apply_Z_tilde(const SampledHalfLineFunction& g) const;

  /// ||([Z~, S~] - sign i hbar) f~|| / ||f~||
  double commutator_residual() const;
  /// Eigenvalues of the discretized S~ (the s~ nodes), sorted.
  std::vector<double> s_tilde_spectrum() const;

 private:
  MobiusTransform m_;
  TransformKind kind_;
  SampledHalfLineFunction f_;
  double z_shift_;
  double scale_;
  int sign_;
};

TransformedPair transform_hft_pair(const MobiusTransform& m, const SampledHalfLineFunction& f);

}  // namespace hftlab
