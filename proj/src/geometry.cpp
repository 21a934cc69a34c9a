#include "supnorm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace supnorm {

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("point coordinates must be finite");
  if (!(y > 0.0)) throw std::invalid_argument("point must lie in the upper half-plane (y > 0)");
}

std::complex<double> mobius_apply(const GroupElement& g, std::complex<double> z) {
  const auto a = static_cast<double>(g.a());
  const auto b = static_cast<double>(g.b());
  const auto c = static_cast<double>(g.c());
  const auto d = static_cast<double>(g.d());
  return (a * z + b) / (c * z + d);
}

UpperHalfPoint mobius_apply(const GroupElement& g, const UpperHalfPoint& z) {
  const auto c = static_cast<double>(g.c());
  const auto d = static_cast<double>(g.d());
  const std::complex<double> j = c * z.z() + d;
  const std::complex<double> w = mobius_apply(g, z.z());
  // Im(gz) = y/|cz+d|^2 exactly; avoids cancellation in the complex division.
  return {w.real(), z.y() / std::norm(j)};
}

double cosh_sq_half_distance(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  return std::norm(z.z() - std::conj(w.z())) / (4.0 * z.y() * w.y());
}

double sinh_sq_half_distance(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  return std::norm(z.z() - w.z()) / (4.0 * z.y() * w.y());
}

double hyperbolic_distance(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  // 2 arccosh(sqrt(c)) written through sinh(d/2) so that d -> 0 keeps full precision.
  return 2.0 * std::asinh(std::sqrt(sinh_sq_half_distance(z, w)));
}

std::pair<UpperHalfPoint, GroupElement> reduce_to_fundamental_domain(const UpperHalfPoint& z,
                                                                     const ReductionOptions& opts) {
  GroupElement g;
  UpperHalfPoint w = z;
  for (int it = 0; it < opts.max_iterations; ++it) {
    // translate into [-1/2, 1/2); x = +1/2 goes to -1/2
    const double shift = -std::floor(w.x() + 0.5);
    if (shift != 0.0) {
      const auto n = static_cast<GroupElement::Int>(shift);
      g = GroupElement::T(n) * g;
      w = UpperHalfPoint(w.x() + shift, w.y());
    }
    if (std::norm(w.z()) < 1.0) {
      g = GroupElement::S() * g;
      w = mobius_apply(GroupElement::S(), w);
      continue;
    }
    return {w, g};
  }
  throw std::runtime_error("reduce_to_fundamental_domain: iteration cap " + std::to_string(opts.max_iterations) +
                           " reached");
}

double hyperbolic_volume(const SurfaceData& s) {
  if (s.genus < 0 || s.num_cusps < 0) throw std::domain_error("genus and cusp count must be nonnegative");
  double chi = 2.0 * s.genus - 2.0 + s.num_cusps;
  for (int m : s.elliptic_orders) {
    if (m < 2) throw std::domain_error("elliptic orders must be >= 2");
    chi += 1.0 - 1.0 / m;
  }
  const double vol = 2.0 * std::numbers::pi * chi;
  if (!(vol > 1e-12)) throw std::domain_error("signature does not describe a hyperbolic surface");
  return vol;
}

double distance_lower_bound_to_fundamental_domain(const UpperHalfPoint& w) {
  const double x = w.x();
  const double y = w.y();
  double sh = 0.0;  // sinh of the distance
  if (x > 0.5) sh = std::max(sh, (x - 0.5) / y);
  if (x < -0.5) sh = std::max(sh, (-0.5 - x) / y);
  const double r2 = x * x + y * y;
  if (r2 < 1.0) sh = std::max(sh, (1.0 - r2) / (2.0 * y));
  return std::asinh(sh);
}

}  // namespace supnorm
