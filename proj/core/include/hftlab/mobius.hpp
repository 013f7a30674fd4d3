#pragma once

#include <string>
#include <vector>

#include "hftlab/sampled.hpp"

namespace hftlab {

/// z -> (a z + b) / (c z + d) with ad - bc = 1.
///
/// (a, b, c, d) and (-a, -b, -c, -d) act identically, so the stored matrix is
/// canonicalized with its first nonzero entry positive.
class MobiusTransform {
 public:
  MobiusTransform(double a, double b, double c, double d);

  static MobiusTransform identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// z -> lambda z, lambda > 0.
  static MobiusTransform dilation(double lambda);
  /// Moves the boundary semiaxis (0, inf) onto (k, inf): z -> z + k, i.e. the
  /// substitution x -> x - k in the argument of boundary functions.
  static MobiusTransform translation(double k);
  /// z -> -1/z.
  static MobiusTransform inversion() { return {0.0, -1.0, 1.0, 0.0}; }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double determinant() const noexcept { return a_ * d_ - b_ * c_; }

  bool approx_equal(const MobiusTransform& other, double tol = 1e-12) const;
  std::string to_string() const;

 private:
  struct Raw {};
  MobiusTransform(Raw, double a, double b, double c, double d);
  void canonicalize();

  double a_, b_, c_, d_;

  friend MobiusTransform mobius_compose(const MobiusTransform&, const MobiusTransform&);
  friend MobiusTransform mobius_inverse(const MobiusTransform&);
};

HalfPlanePoint mobius_apply(const MobiusTransform& m, const HalfPlanePoint& z);

/// (m1 * m2)(z) = m1(m2(z)); determinant renormalized to 1.
MobiusTransform mobius_compose(const MobiusTransform& m1, const MobiusTransform& m2);
MobiusTransform mobius_inverse(const MobiusTransform& m);

/// Open interval of the extended real line; endpoints may be +/-inf.
struct Interval {
  double lo;
  double hi;
};

/// Image of an open boundary arc. One piece unless the arc passes through the
/// point at infinity, in which case it is (lo, inf) U (-inf, hi).
struct BoundaryImage {
  std::vector<Interval> pieces;
  std::string to_string() const;
};

/// Image of a boundary point; the pole maps to infinity and infinity to a/c.
/// `as_lower` decides the sign reported for an infinite image.
double boundary_point(const MobiusTransform& m, double x, bool as_lower);

BoundaryImage boundary_action(const MobiusTransform& m, const Interval& interval);

/// Parses "lo,hi" with "inf", "+inf", "-inf" accepted.
Interval parse_interval(const std::string& text);
std::string format_endpoint(double v);

}  // namespace hftlab
