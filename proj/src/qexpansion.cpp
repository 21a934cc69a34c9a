#include "supnorm/qexpansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace supnorm {

namespace {

void check_terms(int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("q-expansion needs n_terms >= 1");
}

std::size_t first_nonzero(const std::vector<BigInt>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) return i;
  }
  return c.size();
}

IntegerQSeries one_series(int n_terms) {
  IntegerQSeries s;
  s.coeffs.assign(static_cast<std::size_t>(n_terms) + 1, BigInt(0));
  s.coeffs[0] = 1;
  return s;
}

}  // namespace

IntegerQSeries operator*(const IntegerQSeries& f, const IntegerQSeries& g) {
  if (f.coeffs.size() != g.coeffs.size()) throw std::invalid_argument("q-series product needs equal lengths");
  const std::size_t n = f.coeffs.size();
  IntegerQSeries r;
  r.weight = f.weight + g.weight;
  r.coeffs.assign(n, BigInt(0));
  const std::size_t i0 = first_nonzero(f.coeffs);
  const std::size_t j0 = first_nonzero(g.coeffs);
  for (std::size_t i = i0; i < n; ++i) {
    if (f.coeffs[i] == 0) continue;
    for (std::size_t j = j0; i + j < n; ++j) {
      r.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
  }
  return r;
}

BigInt divisor_sigma(int p, int n) {
  if (n < 1 || p < 0) throw std::invalid_argument("divisor_sigma needs n >= 1, p >= 0");
  BigInt s = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(p));
    const int e = n / d;
    if (e != d) s += boost::multiprecision::pow(BigInt(e), static_cast<unsigned>(p));
  }
  return s;
}

template <class Real>
void refresh_coefficient_bound(BasicQExpansion<Real>& f) {
  using std::abs, std::pow;
  f.coeff_exponent = Real(std::max(1, f.weight - 1));
  Real c = 0;
  for (int n = 1; n <= f.n_terms(); ++n) {
    c = std::max(c, abs(f.coeffs[static_cast<std::size_t>(n - 1)]) / pow(Real(n), f.coeff_exponent));
  }
  f.coeff_scale = c;
}

template void refresh_coefficient_bound<long double>(BasicQExpansion<long double>&);
template void refresh_coefficient_bound<double>(BasicQExpansion<double>&);

QExpansion to_qexpansion(const IntegerQSeries& s) {
  if (s.coeffs.size() < 2) throw std::invalid_argument("q-expansion needs n_terms >= 1");
  QExpansion f;
  f.weight = s.weight;
  f.constant_term = s.coeffs[0].convert_to<long double>();
  f.coeffs.reserve(s.coeffs.size() - 1);
  for (std::size_t n = 1; n < s.coeffs.size(); ++n) f.coeffs.push_back(s.coeffs[n].convert_to<long double>());
  f.exact = s.coeffs;
  refresh_coefficient_bound(f);
  return f;
}

QExpansion linear_combination(const std::vector<QExpansion>& forms, const std::vector<long double>& weights) {
  if (forms.empty() || forms.size() != weights.size()) throw std::invalid_argument("linear_combination: size mismatch");
  QExpansion r;
  r.weight = forms[0].weight;
  r.coeffs.assign(forms[0].coeffs.size(), 0.0L);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i];
    if (f.weight != r.weight || f.coeffs.size() != r.coeffs.size()) {
      throw std::invalid_argument("linear_combination: forms differ in weight or length");
    }
    r.constant_term += weights[i] * f.constant_term;
    for (std::size_t n = 0; n < r.coeffs.size(); ++n) r.coeffs[n] += weights[i] * f.coeffs[n];
  }
  refresh_coefficient_bound(r);
  return r;
}

IntegerQSeries eisenstein_series_exact(int weight, int n_terms) {
  check_terms(n_terms);
  int p = 0;
  long factor = 0;
  if (weight == 4) {
    p = 3;
    factor = 240;
  } else if (weight == 6) {
    p = 5;
    factor = -504;
  } else {
    throw std::invalid_argument("eisenstein_series: weight must be 4 or 6");
  }
  IntegerQSeries s;
  s.weight = weight;
  s.coeffs.resize(static_cast<std::size_t>(n_terms) + 1);
  s.coeffs[0] = 1;
  for (int n = 1; n <= n_terms; ++n) s.coeffs[static_cast<std::size_t>(n)] = factor * divisor_sigma(p, n);
  return s;
}

QExpansion eisenstein_series(int weight, int n_terms) { return to_qexpansion(eisenstein_series_exact(weight, n_terms)); }

IntegerQSeries delta_form_exact(int n_terms) {
  check_terms(n_terms);
  const auto e4 = eisenstein_series_exact(4, n_terms);
  const auto e6 = eisenstein_series_exact(6, n_terms);
  const auto a = e4 * e4 * e4;
  const auto b = e6 * e6;
  IntegerQSeries d;
  d.weight = 12;
  d.coeffs.resize(a.coeffs.size());
  for (std::size_t n = 0; n < a.coeffs.size(); ++n) {
    const BigInt diff = a.coeffs[n] - b.coeffs[n];
    if (diff % 1728 != 0) throw std::logic_error("E4^3 - E6^2 not divisible by 1728");
    d.coeffs[n] = diff / 1728;
  }
  return d;
}

QExpansion delta_form(int n_terms) { return to_qexpansion(delta_form_exact(n_terms)); }

int cusp_form_dimension(int weight) {
  if (weight < 12 || weight % 2) return 0;
  return weight / 12 - (weight % 12 == 2 ? 1 : 0);
}

int default_n_terms(int weight) { return std::max(50, 2 * weight); }

std::vector<MonomialExponents> monomial_exponents(int weight, MonomialOrder order) {
  if (weight % 2) throw std::invalid_argument("odd weight " + std::to_string(weight) + " has no level-one forms");
  std::vector<MonomialExponents> out;
  for (int a = 1; 12 * a <= weight; ++a) {
    const int rem = weight - 12 * a;
    if (rem % 4 == 0) {
      out.push_back({a, rem / 4, 0});
    } else if (rem >= 6) {
      out.push_back({a, (rem - 6) / 4, 1});
    }
  }
  if (order == MonomialOrder::DeltaPowerDescending) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<IntegerQSeries> monomial_basis_exact(int weight, int n_terms, MonomialOrder order) {
  check_terms(n_terms);
  const auto exps = monomial_exponents(weight, order);
  std::vector<IntegerQSeries> out;
  if (exps.empty()) return out;
  const auto e4 = eisenstein_series_exact(4, n_terms);
  const auto e6 = eisenstein_series_exact(6, n_terms);
  const auto delta = delta_form_exact(n_terms);
  int max_a = 0, max_b = 0;
  for (const auto& m : exps) {
    max_a = std::max(max_a, m.delta);
    max_b = std::max(max_b, m.e4);
  }
  std::vector<IntegerQSeries> dpow{one_series(n_terms)}, epow{one_series(n_terms)};
  for (int i = 1; i <= max_a; ++i) dpow.push_back(dpow.back() * delta);
  for (int i = 1; i <= max_b; ++i) epow.push_back(epow.back() * e4);
  for (const auto& m : exps) {
    auto s = dpow[static_cast<std::size_t>(m.delta)] * epow[static_cast<std::size_t>(m.e4)];
    if (m.e6) s = s * e6;
    s.weight = weight;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<QExpansion> monomial_basis(int weight, int n_terms, MonomialOrder order) {
  std::vector<QExpansion> out;
  for (const auto& s : monomial_basis_exact(weight, n_terms, order)) out.push_back(to_qexpansion(s));
  return out;
}

long double geometric_tail_bound(long double scale, long double exponent, int N, long double r) {
  if (scale == 0.0L) return 0.0L;
  if (!(r > 0.0L) || !(r < 1.0L)) return std::numeric_limits<long double>::infinity();
  const long double n1 = N + 1.0L;
  // successive-term ratio for n >= N+1 is at most ((N+2)/(N+1))^p r
  const long double ratio = std::pow((n1 + 1.0L) / n1, exponent) * r;
  if (!(ratio < 1.0L)) return std::numeric_limits<long double>::infinity();
  const long double log_first = std::log(scale) + exponent * std::log(n1) + n1 * std::log(r);
  return std::exp(log_first) / (1.0L - ratio);
}

QEvaluation<long double> evaluate_qexp(const QExpansion& f, const UpperHalfPoint& z, const EvaluationOptions& opts) {
  if (z.y() < opts.y_floor) {
    throw std::domain_error("evaluate_qexp: y = " + std::to_string(z.y()) + " below floor " +
                            std::to_string(opts.y_floor));
  }
  using C = std::complex<long double>;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double r = std::exp(-two_pi * static_cast<long double>(z.y()));
  const long double x = static_cast<long double>(z.x());
  const C q = std::polar(r, two_pi * (x - std::floor(x)));
  C acc = 0;
  for (int n = f.n_terms(); n >= 1; --n) acc = (acc + f.coeffs[static_cast<std::size_t>(n - 1)]) * q;
  acc += f.constant_term;
  return {acc, geometric_tail_bound(f.coeff_scale, f.coeff_exponent, f.n_terms(), r)};
}

}  // namespace supnorm
