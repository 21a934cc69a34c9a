#pragma once

#include <complex>
#include <vector>

#include "supnorm/geometry.hpp"
#include "supnorm/orbits.hpp"
#include "supnorm/quadrature.hpp"

namespace supnorm {

/// Weight 2k and heat time t.
struct HeatParams {
  int k = 1;
  double t = 1.0;

  /// Throws std::invalid_argument unless k >= 1 and t > 0.
  void validate() const;
};

/// A truncated sum with an upper bound on the omitted part.
struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

struct ComplexTruncatedValue {
  std::complex<double> value{};
  double tail_bound = 0.0;
};

/// A positive quantity held as its natural logarithm, with the relative
/// quadrature error of the underlying integral.
struct LogQuantity {
  double log_value = 0.0;
  double rel_error = 0.0;

  double value() const;
};

/// log T_{2k}(X) = log cosh(2k arccosh X) for X >= 1, overflow-free.
/// Throws std::domain_error for X < 1.
double chebyshev_T2k_log(int k, double X);

/// Same with X = 1 + delta passed through delta, for X close to 1.
double chebyshev_T2k_log1p(int k, double delta);

/// log K_k(t; rho) for
///   K_k(t; rho) = sqrt2 e^{-t/4} (4 pi t)^{-3/2}
///                 int_rho^inf r e^{-r^2/4t} (cosh r - cosh rho)^{-1/2} T_2k(cosh(r/2)/cosh(rho/2)) dr.
/// The endpoint singularity is removed by r = rho + u^2; rho = 0 uses
/// cosh r - 1 = 2 sinh^2(r/2). Throws QuadratureError on non-convergence.
LogQuantity log_heat_kernel_point(const HeatParams& p, double rho, const QuadratureConfig& q = {});

/// exp(log_heat_kernel_point); overflows to +inf for very large k^2 t.
double heat_kernel_point(const HeatParams& p, double rho, const QuadratureConfig& q = {});

/// sinh(r) dF/drho + sinh(rho) dF/dr for F = r e^{-r^2/4t} T_2k(cosh(r/2)/cosh(rho/2)) / sinh r,
/// from the closed-form expansion (no numerical differentiation).
/// Requires 0 < rho <= r; throws std::domain_error otherwise.
double f_k_defect(const HeatParams& p, double rho, double r);

/// f_k_defect divided by the positive factor r e^{-r^2/4t} T_2k(X) / sinh r.
/// Same sign as f_k_defect, but free of underflow for small t.
double f_k_defect_normalized(const HeatParams& p, double rho, double r);

/// log G_k(t), G_k(t) = e^{-t/4} (4 pi t)^{-3/2} int_0^inf r e^{-r^2/8t} cosh(kr) / sinh(r/2) dr.
LogQuantity log_g_k_envelope(const HeatParams& p, const QuadratureConfig& q = {});
double g_k_envelope(const HeatParams& p, const QuadratureConfig& q = {});

/// Piecewise Chebyshev interpolant of log K_k(t; .) on [0, rho_max].
///
/// Each panel is checked against direct evaluation at off-node points; the
/// largest discrepancy in log K is kept as max_log_error. Panels are halved
/// (up to three times) while the check exceeds tol; after that the constructor
/// throws QuadratureError.
class LogKernelTable {
 public:
  LogKernelTable(const HeatParams& p, double rho_max, const QuadratureConfig& q = {}, double tol = 1e-11,
                 int threads = 0);

  /// Throws std::out_of_range outside [0, rho_max].
  double operator()(double rho) const;
  double max_log_error() const { return max_log_error_; }
  double rho_max() const { return rho_max_; }

 private:
  static constexpr int kNodes = 16;
  double rho_max_;
  double width_ = 0.5;
  std::vector<double> values_;  // kNodes + 1 per panel
  double max_log_error_ = 0.0;
};

struct AutomorphicKernelOptions {
  OrbitOptions orbit{};
  /// Evaluate K through a LogKernelTable instead of one quadrature per distinct rho.
  bool tabulate = true;
  /// Multiplier applied to the empirical counting constant.
  double counting_safety = 2.0;
  /// Extent of the numerically integrated tail beyond rho_max before the
  /// closed-form envelope takes over.
  double tail_window = 10.0;
};

/// Diagonal automorphic kernel sum_g phase(g,z)^k K_k(t; d(z, g z)) over d <= rho_max.
///
/// Terms are reduced in sorted orbit order with compensated summation. The
/// tail bound is A [f(R) e^R + int_R^inf f(rho) e^rho drho] with A twice the
/// counting constant, taking the smaller of f = K_k (monotone by construction)
/// and the Gaussian envelope f = e^{-rho^2/8t} G_k(t).
ComplexTruncatedValue automorphic_heat_kernel_diag(const HeatParams& p, const UpperHalfPoint& z, double rho_max,
                                                   const QuadratureConfig& q = {},
                                                   const AutomorphicKernelOptions& opts = {});

/// Same with a precomputed orbit (must be the full orbit list up to rho_max).
ComplexTruncatedValue automorphic_heat_kernel_diag(const HeatParams& p, const std::vector<OrbitEntry>& orbit,
                                                   double rho_max, const QuadratureConfig& q = {},
                                                   const AutomorphicKernelOptions& opts = {});

/// Sum of K_k(t; rho_g) over the given entries (no phases), in entry order.
double orbit_heat_sum(const HeatParams& p, const std::vector<OrbitEntry>& orbit, const QuadratureConfig& q = {},
                      int threads = 0);

/// Same through a table covering the largest displacement.
double orbit_heat_sum(const LogKernelTable& table, const std::vector<OrbitEntry>& orbit);

/// Tail bound for sum_{rho_g > rho_max} K_k(t; rho_g) given a counting constant.
/// The direct window is widened until the envelope remainder beyond it is
/// below 1e-8 of the window part.
double heat_orbit_tail_bound(const HeatParams& p, double rho_max, double counting_constant,
                             const QuadratureConfig& q = {}, double tail_window = 10.0);

struct LaplacePair {
  double numeric = 0.0;
  double closed_form = 0.0;
  double error = 0.0;
};

/// int_0^inf e^{-a^2 t} e^{-b^2/4t} t^{1/2} dt/t by quadrature, next to (sqrt(pi)/a) e^{-ab}.
LaplacePair laplace_identity(double a, double b, const QuadratureConfig& q = {});

}  // namespace supnorm
