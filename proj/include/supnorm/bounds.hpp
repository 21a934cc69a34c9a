#pragma once

#include <vector>

#include "supnorm/geometry.hpp"
#include "supnorm/heat_kernel.hpp"
#include "supnorm/orbits.hpp"
#include "supnorm/quadrature.hpp"

namespace supnorm {

struct BoundConfig {
  double delta = 1.0;
  double rho_max = 6.0;
  int cusp_width = 1;
  /// 0 means compute_c_delta(delta).
  double c_delta = 0.0;
  double counting_safety = 2.0;
  OrbitOptions orbit{};

  /// Throws std::invalid_argument for delta <= 0, rho_max < delta, width < 1,
  /// or a c_delta below the recomputed supremum.
  void validate() const;
};

/// [2 sqrt(log 4)(rho + log 4) e^{-rho/2} / sqrt(sinh rho) + (rho + log 4 + 1) e^{-rho}/2] / (rho e^{-rho}).
double c_delta_ratio(double rho);

/// Limit of c_delta_ratio as rho -> infinity: 2 sqrt(2 log 4) + 1/2.
double c_delta_ratio_limit();

/// sup of c_delta_ratio over [delta, infinity): coarse scan of [delta, delta + 50]
/// refined by Brent's method, combined with the limit at infinity.
double compute_c_delta(double delta);

/// k sum_{rho < delta} 2 sqrt2 / cosh^{2k}(rho/2) + C k sum_{rho >= delta} rho e^{-rho} / cosh^{2k}(rho/2)
/// over the orbit of z with rho <= rho_max. The tail is
/// A [f(R) e^R + int_R^inf f e^rho], A = counting_safety * counting constant,
/// using cosh(rho/2) >= e^{rho/2}/2 for the integral.
TruncatedValue explicit_bound(int weight, const UpperHalfPoint& z, const BoundConfig& cfg);
TruncatedValue explicit_bound(int weight, const std::vector<OrbitEntry>& orbit, const BoundConfig& cfg);

/// The same sums restricted to translations (c = 0).
TruncatedValue explicit_bound_translation_part(int weight, const std::vector<OrbitEntry>& orbit, const BoundConfig& cfg);

/// h(rho) = int_rho^inf r e^{-r/2} (cosh r - cosh rho)^{-1/2} dr; rho = 0 allowed.
QuadratureResult<double> h_function_result(double rho, const QuadratureConfig& q = {});
double h_function(double rho, const QuadratureConfig& q = {});

/// h(0) with its error estimate; bounded by 2 sqrt2.
QuadratureResult<double> base_integral(const QuadratureConfig& q = {});

/// y maximizing y^{2k} e^{-4 pi y}: k/(2 pi) with k = weight/2.
double cusp_strip_maximizer(int weight);

struct HorocycleComparison {
  double sum_value = 0.0;
  double sum_tail = 0.0;
  double integral_bound = 0.0;
};

/// sum_{n>=1} ((n/2y)^2 + 1)^{-k} / (2y) against sqrt(pi) Gamma(k - 1/2) / (2 Gamma(k)).
HorocycleComparison horocycle_sum_vs_gamma_ratio(int weight, double y);

/// Same with k given directly (k >= 1, any integer).
HorocycleComparison horocycle_sum_vs_gamma_ratio_k(int k, double y);

struct SubgroupComparison {
  double sub_sum = 0.0;
  double full_sum = 0.0;
  std::size_t sub_terms = 0;
  std::size_t full_terms = 0;
};

/// Heat-kernel orbit sums over Gamma_0(N) and over PSL2(Z), both truncated at rho_max.
SubgroupComparison subgroup_orbit_comparison(const UpperHalfPoint& z, const HeatParams& p, int N, double rho_max,
                                             const QuadratureConfig& q = {});

/// Same from a precomputed orbit and table.
SubgroupComparison subgroup_orbit_comparison(const std::vector<OrbitEntry>& orbit, const LogKernelTable& table, int N);

}  // namespace supnorm
