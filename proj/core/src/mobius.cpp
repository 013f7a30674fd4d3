#include "hftlab/mobius.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "hftlab/errors.hpp"

namespace hftlab {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

MobiusTransform::MobiusTransform(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  for (double v : {a, b, c, d})
    if (!std::isfinite(v)) throw InputError("MobiusTransform: coefficients must be finite");
  if (std::abs(determinant() - 1.0) > 1e-12)
    throw InputError("MobiusTransform: ad - bc must equal 1 (got " + std::to_string(determinant()) + ")");
  canonicalize();
}

MobiusTransform::MobiusTransform(Raw, double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  const double det = determinant();
  if (!(det > 0.0)) throw InputError("MobiusTransform: degenerate product");
  const double r = 1.0 / std::sqrt(det);
  a_ *= r;
  b_ *= r;
  c_ *= r;
  d_ *= r;
  canonicalize();
}

void MobiusTransform::canonicalize() {
  for (double v : {a_, b_, c_, d_}) {
    if (v == 0.0) continue;
    if (v < 0.0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    break;
  }
  // no negative zeros in serialized output
  a_ += 0.0;
  b_ += 0.0;
  c_ += 0.0;
  d_ += 0.0;
}

MobiusTransform MobiusTransform::dilation(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InputError("dilation: lambda must be positive");
  const double r = std::sqrt(lambda);
  return {Raw{}, r, 0.0, 0.0, 1.0 / r};
}

MobiusTransform MobiusTransform::translation(double k) {
  if (!std::isfinite(k)) throw InputError("translation: k must be finite");
  return {1.0, k, 0.0, 1.0};
}

bool MobiusTransform::approx_equal(const MobiusTransform& o, double tol) const {
  return std::abs(a_ - o.a_) <= tol && std::abs(b_ - o.b_) <= tol && std::abs(c_ - o.c_) <= tol &&
         std::abs(d_ - o.d_) <= tol;
}

std::string MobiusTransform::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << a_ << "," << b_ << "," << c_ << "," << d_;
  return os.str();
}

HalfPlanePoint mobius_apply(const MobiusTransform& m, const HalfPlanePoint& z) {
  const complex w = z.z();
  const complex den = m.c() * w + m.d();
  // c = d = 0 is excluded by the determinant, so den != 0 for Im z > 0.
  const complex img = (m.a() * w + m.b()) / den;
  return {img.real(), z.y / std::norm(den)};
}

MobiusTransform mobius_compose(const MobiusTransform& m1, const MobiusTransform& m2) {
  return {MobiusTransform::Raw{}, m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
          m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_};
}

MobiusTransform mobius_inverse(const MobiusTransform& m) {
  return {MobiusTransform::Raw{}, m.d_, -m.b_, -m.c_, m.a_};
}

double boundary_point(const MobiusTransform& m, double x, bool as_lower) {
  const double signed_inf = as_lower ? -inf : inf;
  if (std::isinf(x)) {
    if (m.c() == 0.0) {
      // a d = 1 > 0: orientation of infinity is preserved.
      return x;
    }
    return m.a() / m.c() + 0.0;
  }
  const double den = m.c() * x + m.d();
  if (den == 0.0) return signed_inf;
  return (m.a() * x + m.b()) / den + 0.0;
}

BoundaryImage boundary_action(const MobiusTransform& m, const Interval& iv) {
  if (std::isnan(iv.lo) || std::isnan(iv.hi) || !(iv.hi > iv.lo))
    throw InputError("boundary_action: need lo < hi");
  const double lo = boundary_point(m, iv.lo, true);
  const double hi = boundary_point(m, iv.hi, false);
  BoundaryImage img;
  // Orientation is preserved on the circle R u {inf}; lo >= hi means the image arc
  // runs through infinity.
  if (lo < hi) {
    img.pieces.push_back({lo, hi});
  } else {
    img.pieces.push_back({lo, inf});
    img.pieces.push_back({-inf, hi});
  }
  return img;
}

std::string format_endpoint(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(15);
  os << (v + 0.0);
  return os.str();
}

std::string BoundaryImage::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k > 0) out += "U";
    out += "(" + format_endpoint(pieces[k].lo) + "," + format_endpoint(pieces[k].hi) + ")";
  }
  return out;
}

Interval parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("interval must be 'lo,hi'");
  auto parse = [](std::string t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t == "inf" || t == "+inf" || t == "infinity") return inf;
    if (t == "-inf" || t == "-infinity") return -inf;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw InputError("interval endpoint '" + t + "' is not a number");
    }
    if (used != t.size()) throw InputError("interval endpoint '" + t + "' is not a number");
    return v;
  };
  const Interval out{parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
  if (std::isnan(out.lo) || std::isnan(out.hi) || !(out.lo < out.hi))
    throw InputError("interval needs lo < hi");
  return out;
}

}  // namespace hftlab
