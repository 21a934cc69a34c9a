#include "supnorm/bergman.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace supnorm {

namespace {

using LD = long double;
constexpr LD kPiL = std::numbers::pi_v<LD>;

double condition_estimate(const MatrixLD& G) {
  Eigen::SelfAdjointEigenSolver<MatrixLD> es(G, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const LD lo = ev.minCoeff(), hi = ev.maxCoeff();
  if (!(lo > 0)) return INFINITY;
  return static_cast<double>(hi / lo);
}

// |f_j(z)|^2 summed over the basis, plus the truncation error of that sum.
std::pair<LD, LD> sum_of_squares(const OrthonormalBasis& basis, const UpperHalfPoint& z) {
  LD s = 0, err = 0;
  for (const auto& f : basis.forms) {
    const auto v = evaluate_qexp(f, z);
    const LD a = std::abs(v.value);
    s += a * a;
    err += 2 * a * v.trunc_err + v.trunc_err * v.trunc_err;
  }
  return {s, err};
}

}  // namespace

OrthonormalBasis orthonormal_basis(int weight, const QuadratureConfig& q, const BasisOptions& opts) {
  if (weight % 2) throw std::invalid_argument("odd weight " + std::to_string(weight));
  OrthonormalBasis out;
  out.weight = weight;
  out.n_terms = opts.n_terms > 0 ? opts.n_terms : default_n_terms(weight);
  const auto mono = monomial_basis(weight, out.n_terms, opts.order);
  if (mono.empty()) return out;
  const auto d = static_cast<Eigen::Index>(mono.size());
  const Eigen::Index N = out.n_terms;

  const MatrixLD G = petersson_gram(mono, q, opts.threads);
  Eigen::Matrix<LD, Eigen::Dynamic, 1> scale(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!(G(i, i) > 0)) throw GramError("Gram matrix has a non-positive diagonal entry", INFINITY);
    scale(i) = 1 / std::sqrt(G(i, i));
  }
  const MatrixLD Gs = scale.asDiagonal() * G * scale.asDiagonal();
  Eigen::LLT<MatrixLD> llt(Gs);
  if (llt.info() != Eigen::Success) {
    const double cond = condition_estimate(Gs);
    throw GramError("Gram matrix not numerically positive definite (condition ~ " + std::to_string(cond) + ")", cond);
  }
  MatrixLD M(d, N);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index n = 0; n < N; ++n) M(i, n) = scale(i) * mono[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(n)];
  }
  const MatrixLD C = llt.matrixL().solve(M);
  for (Eigen::Index i = 0; i < d; ++i) {
    QExpansion f;
    f.weight = weight;
    f.coeffs.resize(static_cast<std::size_t>(N));
    for (Eigen::Index n = 0; n < N; ++n) f.coeffs[static_cast<std::size_t>(n)] = C(i, n);
    refresh_coefficient_bound(f);
    out.forms.push_back(std::move(f));
  }

  if (opts.recheck) {
    const MatrixLD R = petersson_gram(out.forms, q, opts.threads) - MatrixLD::Identity(d, d);
    out.gram_residual = static_cast<double>(R.cwiseAbs().maxCoeff());
    if (!(out.gram_residual <= opts.orthonormality_tol)) {
      throw GramError("orthonormalized Gram residual " + std::to_string(out.gram_residual) + " above tolerance",
                      condition_estimate(Gs));
    }
  } else {
    const MatrixLD L = llt.matrixL();
    const MatrixLD Linv = L.triangularView<Eigen::Lower>().solve(MatrixLD::Identity(d, d));
    out.gram_residual = static_cast<double>((Linv * Gs * Linv.transpose() - MatrixLD::Identity(d, d)).cwiseAbs().maxCoeff());
  }
  return out;
}

double bergman_kernel_diag(int weight, const UpperHalfPoint& z, const OrthonormalBasis& basis) {
  return bergman_kernel_diag_certified(weight, z, basis).value;
}

TruncatedValue bergman_kernel_diag_certified(int weight, const UpperHalfPoint& z, const OrthonormalBasis& basis) {
  if (weight != basis.weight) throw std::invalid_argument("bergman_kernel_diag: basis weight mismatch");
  const auto [s, err] = sum_of_squares(basis, z);
  const LD yw = std::exp(weight * std::log(static_cast<LD>(z.y())));
  return {static_cast<double>(s * yw), static_cast<double>(err * yw)};
}

double bergman_kernel_diag_any(const UpperHalfPoint& z, const OrthonormalBasis& basis) {
  const auto [w, g] = reduce_to_fundamental_domain(z);
  (void)g;
  return bergman_kernel_diag(basis.weight, w, basis);
}

DomainIntegral bergman_average(const OrthonormalBasis& basis, double y_max) {
  DomainRuleOptions opts;
  opts.y_max = y_max > 0 ? y_max : std::max(20.0, static_cast<double>(basis.weight));
  const int w = basis.weight;
  return integrate_over_fundamental_domain(
      [&](double x, double y) {
        const auto [s, err] = sum_of_squares(basis, UpperHalfPoint(x, y));
        (void)err;
        return s * std::exp(w * std::log(static_cast<LD>(y)));
      },
      opts);
}

std::complex<double> apply_laplacian_fd(const ComplexField& field, int k, const UpperHalfPoint& z, double h) {
  if (!(h > 0.0) || !(h < z.y())) throw std::invalid_argument("apply_laplacian_fd: need 0 < h < y");
  const double x = z.x(), y = z.y();
  const auto c = field(z);
  const auto xp = field(UpperHalfPoint(x + h, y));
  const auto xm = field(UpperHalfPoint(x - h, y));
  const auto yp = field(UpperHalfPoint(x, y + h));
  const auto ym = field(UpperHalfPoint(x, y - h));
  const auto fxx = (xp - 2.0 * c + xm) / (h * h);
  const auto fyy = (yp - 2.0 * c + ym) / (h * h);
  const auto fx = (xp - xm) / (2.0 * h);
  return -y * y * (fxx + fyy) + std::complex<double>(0.0, 2.0 * k * y) * fx;
}

ComplexField maass_field(const QExpansion& f) {
  return [f](const UpperHalfPoint& z) {
    const auto v = evaluate_qexp(f, z, EvaluationOptions{0.0});
    const LD yk = std::exp(LD(f.weight) / 2 * std::log(static_cast<LD>(z.y())));
    return std::complex<double>(static_cast<double>(v.value.real() * yk), static_cast<double>(v.value.imag() * yk));
  };
}

TruncatedValue fourier_square_integral(const QExpansion& f, double y) {
  if (!(y > 0.0)) throw std::invalid_argument("fourier_square_integral: y must be positive");
  const LD ly = std::log(static_cast<LD>(y));
  LD s = 0;
  for (int n = f.n_terms(); n >= 1; --n) {
    const LD a = f.coeffs[static_cast<std::size_t>(n - 1)];
    if (a == 0) continue;
    s += std::exp(2 * std::log(std::abs(a)) + f.weight * ly - 4 * kPiL * n * y);
  }
  const LD tail = geometric_tail_bound(f.coeff_scale * f.coeff_scale * std::exp(f.weight * ly), 2 * f.coeff_exponent,
                                       f.n_terms(), std::exp(-4 * kPiL * y));
  return {static_cast<double>(s), static_cast<double>(tail)};
}

double horocycle_integral_quadrature(const QExpansion& f, double y, const QuadratureConfig& q) {
  const LD yw = std::exp(f.weight * std::log(static_cast<LD>(y)));
  const LD ref = std::max<LD>(fourier_square_integral(f, y).value, std::numeric_limits<LD>::min());
  auto g = [&](LD x) {
    const auto v = evaluate_qexp(f, UpperHalfPoint(static_cast<double>(x), y), EvaluationOptions{0.0});
    return std::norm(v.value) * yw / ref;
  };
  std::vector<LD> breaks;
  for (int i = 0; i <= 8; ++i) breaks.push_back(LD(i) / 8);
  QuadratureConfig qq = q;
  qq.abs_tol = q.rel_tol * 1e-3;
  return static_cast<double>(integrate<LD>(g, breaks, qq).value * ref);
}

double sym_square_L_from_norm(int weight, const QuadratureConfig& q) {
  if (cusp_form_dimension(weight) != 1) {
    throw std::invalid_argument("sym_square_L_from_norm: dim S_" + std::to_string(weight) + " is not 1");
  }
  const auto f = monomial_basis(weight, default_n_terms(weight)).front();
  const LD norm = petersson_inner(f, f, q).real();
  const LD log_L = std::log(kPiL / 2) + weight * std::log(4 * kPiL) + std::log(norm) - boost::math::lgamma(LD(weight));
  return static_cast<double>(std::exp(log_L));
}

}  // namespace supnorm
