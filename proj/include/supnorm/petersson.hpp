#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "supnorm/qexpansion.hpp"
#include "supnorm/quadrature.hpp"

namespace supnorm {

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

/// <f, g> = int_F f conj(g) y^w dx dy / y^2 over {|x| <= 1/2, |z| >= 1}.
///
/// The part y >= 1 is summed termwise, sum a_n b_n Gamma(w-1, 4 pi n) / (4 pi n)^(w-1),
/// with a certified bound on the coefficients beyond N. The region below y = 1
/// is integrated by nested adaptive Gauss-Kronrod. Coefficients are real, so
/// the result is real and returned with zero imaginary part.
/// Throws std::invalid_argument for unequal weights or non-cusp forms and
/// QuadratureError when the quadrature or the coefficient tail misses tolerance.
std::complex<long double> petersson_inner(const QExpansion& f, const QExpansion& g, const QuadratureConfig& q = {});

/// Real symmetric Gram matrix of the given forms; entries computed in parallel.
MatrixLD petersson_gram(const std::vector<QExpansion>& forms, const QuadratureConfig& q = {}, int threads = 0);

/// The y >= 1 part alone (exact up to the coefficient tail).
long double petersson_cusp_part(const QExpansion& f, const QExpansion& g);

struct DomainRuleOptions {
  double y_max = 40.0;
  int x_panels = 4;
  /// Largest ratio y_{i+1}/y_i between consecutive y panel ends.
  double y_panel_ratio = 1.3;
};

struct DomainIntegral {
  long double value = 0;
  /// |difference| between the 20- and 15-point tensor rules.
  long double error = 0;
};

/// int_F h(x, y) dx dy / y^2 over {|x| <= 1/2, |z| >= 1, y <= y_max} by a
/// panelled tensor Gauss-Legendre rule. Independent of the adaptive code.
DomainIntegral integrate_over_fundamental_domain(const std::function<long double(double, double)>& h,
                                                 const DomainRuleOptions& opts = {});

/// <f, g> from the tensor rule alone (oracle for petersson_inner).
long double petersson_inner_tensor(const QExpansion& f, const QExpansion& g, const DomainRuleOptions& opts = {});

}  // namespace supnorm
