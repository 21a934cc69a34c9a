#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "supnorm/group.hpp"

namespace supnorm {

/// A point z = x + iy of the upper half-plane.
class UpperHalfPoint {
 public:
  /// Throws std::invalid_argument for y <= 0 or non-finite coordinates.
  UpperHalfPoint(double x, double y);
  explicit UpperHalfPoint(std::complex<double> z) : UpperHalfPoint(z.real(), z.imag()) {}

  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> z() const { return {x_, y_}; }

  friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

 private:
  double x_;
  double y_;
};

/// Signature data of a hyperbolic orbifold: genus, cusp count, elliptic orders.
struct SurfaceData {
  int genus = 0;
  int num_cusps = 0;
  std::vector<int> elliptic_orders;

  /// PSL2(Z): g = 0, one cusp, elliptic points of order 2 and 3.
  static SurfaceData modular_group() { return {0, 1, {2, 3}}; }
};

/// (az+b)/(cz+d).
UpperHalfPoint mobius_apply(const GroupElement& g, const UpperHalfPoint& z);

/// Same action on a complex number off the real axis (used for conj(z)).
std::complex<double> mobius_apply(const GroupElement& g, std::complex<double> z);

/// cosh^2(d(z,w)/2) = |z - conj(w)|^2 / (4 Im z Im w).
double cosh_sq_half_distance(const UpperHalfPoint& z, const UpperHalfPoint& w);

/// sinh^2(d(z,w)/2) = |z - w|^2 / (4 Im z Im w); accurate for nearby points.
double sinh_sq_half_distance(const UpperHalfPoint& z, const UpperHalfPoint& w);

double hyperbolic_distance(const UpperHalfPoint& z, const UpperHalfPoint& w);

struct ReductionOptions {
  int max_iterations = 10000;
};

/// Maps z into {|x| <= 1/2, |z| >= 1}. Returns (z*, g) with g z = z*.
///
/// Ties are canonicalized: x = +1/2 is sent to x = -1/2, points on the unit arc
/// are kept. Throws std::runtime_error when the iteration cap is hit.
std::pair<UpperHalfPoint, GroupElement> reduce_to_fundamental_domain(const UpperHalfPoint& z,
                                                                     const ReductionOptions& opts = {});

/// 2 pi (2g - 2 + c + sum (1 - 1/m_p)). Throws std::domain_error when the
/// value is not positive or the data is malformed.
double hyperbolic_volume(const SurfaceData& s);

/// Lower bound for the hyperbolic distance from w to the standard fundamental
/// domain: the largest distance to one of its three bounding half-planes.
/// Zero when w lies in the closed domain.
double distance_lower_bound_to_fundamental_domain(const UpperHalfPoint& w);

}  // namespace supnorm
