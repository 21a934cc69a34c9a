#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "supnorm/geometry.hpp"
#include "supnorm/heat_kernel.hpp"
#include "supnorm/petersson.hpp"
#include "supnorm/qexpansion.hpp"

namespace supnorm {

/// Petersson-orthonormal basis f_1..f_d of S_w for level one.
struct OrthonormalBasis {
  int weight = 0;
  int n_terms = 0;
  std::vector<QExpansion> forms;
  /// Max-abs deviation from the identity of the recomputed Gram matrix.
  double gram_residual = 0.0;

  int dimension() const { return static_cast<int>(forms.size()); }
};

struct BasisOptions {
  int n_terms = 0;  // 0: default_n_terms(weight)
  MonomialOrder order = MonomialOrder::DeltaPowerAscending;
  double orthonormality_tol = 1e-6;
  /// Recompute the Gram matrix of the output forms for gram_residual.
  bool recheck = true;
  int threads = 0;
};

class GramError : public std::runtime_error {
 public:
  GramError(const std::string& what, double condition) : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// Gram matrix of the monomials, Jacobi-scaled Cholesky G = L L^T, forms = L^{-1} monomials.
/// Weight < 12 gives the empty basis. Throws std::invalid_argument for odd
/// weight and GramError when the scaled Gram matrix is not numerically positive
/// definite or the recomputed residual exceeds orthonormality_tol.
OrthonormalBasis orthonormal_basis(int weight, const QuadratureConfig& q = {}, const BasisOptions& opts = {});

/// S(z) = sum_j |f_j(z)|^2 y^w. Throws std::invalid_argument on a weight
/// mismatch and std::domain_error below the evaluation floor.
double bergman_kernel_diag(int weight, const UpperHalfPoint& z, const OrthonormalBasis& basis);

/// Same with a bound on the q-expansion truncation error of the sum.
TruncatedValue bergman_kernel_diag_certified(int weight, const UpperHalfPoint& z, const OrthonormalBasis& basis);

/// Evaluation at any point of H: reduces z into F first (S is invariant).
double bergman_kernel_diag_any(const UpperHalfPoint& z, const OrthonormalBasis& basis);

/// int_F S dmu by the tensor rule (should equal the dimension).
DomainIntegral bergman_average(const OrthonormalBasis& basis, double y_max = 0.0);

using ComplexField = std::function<std::complex<double>(const UpperHalfPoint&)>;

/// Delta_k phi = -y^2 (phi_xx + phi_yy) + 2 i k y phi_x by central differences with step h.
std::complex<double> apply_laplacian_fd(const ComplexField& field, int k, const UpperHalfPoint& z, double h);

/// z -> f(z) y^{w/2}, the weight w/2 Maass form attached to f.
ComplexField maass_field(const QExpansion& f);

/// int_0^1 |f(x+iy)|^2 y^w dx = sum_n a_n^2 y^w e^{-4 pi n y}, with tail certificate.
TruncatedValue fourier_square_integral(const QExpansion& f, double y);

/// The same horocycle integral by direct x-quadrature (oracle).
double horocycle_integral_quadrature(const QExpansion& f, double y, const QuadratureConfig& q = {});

/// L(Sym^2 f, 1) = (pi/2) (4 pi)^w <f,f> / Gamma(w) for the normalized eigenform f
/// spanning a one-dimensional S_w. Throws std::invalid_argument unless dim S_w = 1.
double sym_square_L_from_norm(int weight, const QuadratureConfig& q = {});

}  // namespace supnorm
