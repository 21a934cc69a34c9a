#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <vector>

#include "supnorm/geometry.hpp"

namespace supnorm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact q-series a_0 + a_1 q + ... + a_N q^N with integer coefficients.
struct IntegerQSeries {
  int weight = 0;
  std::vector<BigInt> coeffs;  // coeffs[n] = a_n, n = 0..N

  int n_terms() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Truncated series product (both operands must have the same length).
IntegerQSeries operator*(const IntegerQSeries& f, const IntegerQSeries& g);

/// sigma_p(n) = sum of d^p over divisors d of n.
BigInt divisor_sigma(int p, int n);

/// Truncated Fourier expansion sum_{n<=N} a_n q^n, q = e^{2 pi i z}, of a
/// level-one modular form of weight `weight`, with coefficients in Real.
///
/// The constant term is held apart from a_1..a_N. coeff_scale and
/// coeff_exponent certify |a_n| <= coeff_scale * n^coeff_exponent for n > N;
/// exact integer coefficients are kept when the form has them.
template <class Real>
struct BasicQExpansion {
  int weight = 0;
  Real constant_term = 0;
  std::vector<Real> coeffs;  // coeffs[n-1] = a_n
  Real coeff_scale = 0;
  Real coeff_exponent = 0;
  std::vector<BigInt> exact;  // a_0..a_N when integral, else empty

  int n_terms() const { return static_cast<int>(coeffs.size()); }
  bool is_cusp_form() const { return constant_term == Real(0); }
  Real coefficient(int n) const { return n == 0 ? constant_term : coeffs.at(static_cast<std::size_t>(n - 1)); }
};

using QExpansion = BasicQExpansion<long double>;

/// Real-coefficient copy of an integer series with a fresh growth certificate.
QExpansion to_qexpansion(const IntegerQSeries& s);

/// Recomputes coeff_scale from the stored coefficients with exponent weight - 1.
template <class Real>
void refresh_coefficient_bound(BasicQExpansion<Real>& f);

/// Linear combination sum_i w_i f_i of forms of one weight (exact part dropped).
QExpansion linear_combination(const std::vector<QExpansion>& forms, const std::vector<long double>& weights);

/// E_4 = 1 + 240 sum sigma_3(n) q^n or E_6 = 1 - 504 sum sigma_5(n) q^n.
/// Throws std::invalid_argument for other weights.
IntegerQSeries eisenstein_series_exact(int weight, int n_terms);
QExpansion eisenstein_series(int weight, int n_terms);

/// Delta = (E_4^3 - E_6^2) / 1728.
IntegerQSeries delta_form_exact(int n_terms);
QExpansion delta_form(int n_terms);

/// Exponents (a, b, c) of Delta^a E_4^b E_6^c.
struct MonomialExponents {
  int delta = 0;
  int e4 = 0;
  int e6 = 0;
};

enum class MonomialOrder { DeltaPowerAscending, DeltaPowerDescending };

/// Exponents with a >= 1, c in {0, 1}, 12a + 4b + 6c = weight; one per cusp-form dimension.
std::vector<MonomialExponents> monomial_exponents(int weight, MonomialOrder order = MonomialOrder::DeltaPowerAscending);

/// dim S_weight for level one.
int cusp_form_dimension(int weight);

/// Default truncation max(50, ceil(4 k)) with k = weight/2.
int default_n_terms(int weight);

std::vector<IntegerQSeries> monomial_basis_exact(int weight, int n_terms,
                                                 MonomialOrder order = MonomialOrder::DeltaPowerAscending);
std::vector<QExpansion> monomial_basis(int weight, int n_terms,
                                       MonomialOrder order = MonomialOrder::DeltaPowerAscending);

template <class Real>
struct QEvaluation {
  std::complex<Real> value;
  Real trunc_err = 0;
};

struct EvaluationOptions {
  double y_floor = 0.5;
};

/// sum_{n<=N} a_n e^{2 pi i n z} with a geometric-tail truncation certificate.
/// Throws std::domain_error below the y floor; the certificate is +inf when the
/// coefficient bound does not yield a convergent tail at this height.
QEvaluation<long double> evaluate_qexp(const QExpansion& f, const UpperHalfPoint& z, const EvaluationOptions& opts = {});

/// Upper bound on sum_{n>N} scale n^p r^n for 0 < r < 1 (+inf when the ratio test fails).
long double geometric_tail_bound(long double scale, long double exponent, int N, long double r);

}  // namespace supnorm
