#include "supnorm/bounds.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "supnorm/numerics.hpp"

namespace supnorm {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog4 = std::log(4.0);

double log_sech_pow(int k, double rho) { return -2.0 * k * num::log_cosh(rho / 2.0); }

double neumaier(const std::vector<double>& terms) {
  double sum = 0.0, comp = 0.0;
  for (double v : terms) {
    const double s = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return sum + comp;
}

TruncatedValue orbit_bound_sum(int weight, const std::vector<OrbitEntry>& orbit, const BoundConfig& cfg,
                          bool translations_only) {
  if (weight < 2 || weight % 2) throw std::invalid_argument("explicit_bound: weight must be even and positive");
  cfg.validate();
  const int k = weight / 2;
  const double C = cfg.c_delta > 0.0 ? cfg.c_delta : compute_c_delta(cfg.delta);
  std::vector<double> terms;
  terms.reserve(orbit.size());
  for (const auto& e : orbit) {
    if (e.rho > cfg.rho_max) continue;
    if (translations_only && e.element.c() != 0) continue;
    const double ls = log_sech_pow(k, e.rho);
    if (e.rho < cfg.delta) {
      terms.push_back(k * 2.0 * std::numbers::sqrt2 * std::exp(ls));
    } else {
      terms.push_back(k * C * e.rho * std::exp(-e.rho + ls));
    }
  }
  const double R = cfg.rho_max;
  const double A = cfg.counting_safety * counting_constant(orbit);
  // f(R) e^R + int_R^inf f e^rho with f = k C rho e^{-rho} cosh^{-2k}(rho/2)
  const double boundary = k * C * R * std::exp(log_sech_pow(k, R));
  const double integral = k * C * std::exp(k * kLog4 - k * R) * (R / k + 1.0 / (double(k) * k));
  return {neumaier(terms), A * (boundary + integral)};
}

}  // namespace

void BoundConfig::validate() const {
  if (!(delta > 0.0)) throw std::invalid_argument("BoundConfig: delta must be positive");
  if (!(rho_max >= std::max(delta, 1.0))) throw std::invalid_argument("BoundConfig: rho_max must be >= max(delta, 1)");
  if (cusp_width < 1) throw std::invalid_argument("BoundConfig: cusp_width must be >= 1");
  if (c_delta != 0.0 && !(c_delta >= compute_c_delta(delta) * (1.0 - 1e-9))) {
    throw std::invalid_argument("BoundConfig: c_delta below the supremum for this delta");
  }
}

double c_delta_ratio(double rho) {
  if (!(rho > 0.0)) throw std::domain_error("c_delta_ratio needs rho > 0");
  // both terms divided by rho e^{-rho}
  const double first =
      2.0 * std::sqrt(kLog4) * (rho + kLog4) * std::exp(rho / 2.0 - 0.5 * num::log_sinh(rho)) / rho;
  const double second = (rho + kLog4 + 1.0) / (2.0 * rho);
  return first + second;
}

double c_delta_ratio_limit() { return 2.0 * std::sqrt(2.0 * kLog4) + 0.5; }

double compute_c_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("compute_c_delta needs delta > 0");
  const double hi = delta + 50.0;
  constexpr int kCoarse = 5000;
  double best = c_delta_ratio(delta), arg = delta;
  for (int i = 1; i <= kCoarse; ++i) {
    const double rho = delta + (hi - delta) * i / kCoarse;
    const double v = c_delta_ratio(rho);
    if (v > best) {
      best = v;
      arg = rho;
    }
  }
  if (arg > delta) {
    const double step = (hi - delta) / kCoarse;
    const auto r = boost::math::tools::brent_find_minima([](double x) { return -c_delta_ratio(x); },
                                                         std::max(delta, arg - step), std::min(hi, arg + step), 52);
    best = std::max(best, -r.second);
  }
  return std::max(best, c_delta_ratio_limit());
}

TruncatedValue explicit_bound(int weight, const std::vector<OrbitEntry>& orbit, const BoundConfig& cfg) {
  return orbit_bound_sum(weight, orbit, cfg, false);
}

TruncatedValue explicit_bound(int weight, const UpperHalfPoint& z, const BoundConfig& cfg) {
  cfg.validate();
  return explicit_bound(weight, enumerate_orbit(z, cfg.rho_max, cfg.orbit), cfg);
}

TruncatedValue explicit_bound_translation_part(int weight, const std::vector<OrbitEntry>& orbit,
                                              const BoundConfig& cfg) {
  return orbit_bound_sum(weight, orbit, cfg, true);
}

QuadratureResult<double> h_function_result(double rho, const QuadratureConfig& q) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("h_function needs rho >= 0");
  constexpr double kSpan = 80.0;
  if (rho == 0.0) {
    // cosh r - 1 = 2 sinh^2(r/2)
    auto f = [](double r) {
      return 2.0 * std::exp(num::log_x_over_sinh(r / 2.0) - r / 2.0) / std::numbers::sqrt2;
    };
    std::vector<double> breaks;
    for (double b = 0.0; b < kSpan; b += 4.0) breaks.push_back(b);
    breaks.push_back(kSpan);
    return integrate<double>(f, breaks, q);
  }
  // r = rho + u^2, s = u^2/2: 2u / sqrt(cosh r - cosh rho) = 2 sqrt(s / sinh s) / sqrt(sinh((r + rho)/2))
  auto f = [rho](double u) {
    const double s = 0.5 * u * u;
    const double r = rho + u * u;
    return 2.0 * r * std::exp(-r / 2.0 + 0.5 * num::log_x_over_sinh(s) - 0.5 * num::log_sinh((r + rho) / 2.0));
  };
  const double u_max = std::sqrt(kSpan);
  std::vector<double> breaks;
  for (double b = 0.0; b < u_max; b += 1.0) breaks.push_back(b);
  breaks.push_back(u_max);
  return integrate<double>(f, breaks, q);
}

double h_function(double rho, const QuadratureConfig& q) {
  if (!(rho > 0.0)) throw std::invalid_argument("h_function needs rho > 0");
  return h_function_result(rho, q).value;
}

QuadratureResult<double> base_integral(const QuadratureConfig& q) { return h_function_result(0.0, q); }

double cusp_strip_maximizer(int weight) {
  if (weight < 2) throw std::invalid_argument("cusp_strip_maximizer needs k >= 1");
  return (weight / 2.0) / (2.0 * kPi);
}

HorocycleComparison horocycle_sum_vs_gamma_ratio_k(int k, double y) {
  if (k < 1 || !(y > 0.0)) throw std::invalid_argument("horocycle_sum_vs_gamma_ratio needs k >= 1, y > 0");
  const double two_y = 2.0 * y;
  HorocycleComparison out;
  out.integral_bound =
      std::sqrt(kPi) / 2.0 * std::exp(boost::math::lgamma(k - 0.5) - boost::math::lgamma(static_cast<double>(k)));
  // sum_{n > M} <= int_{M/2y}^inf (1 + eta^2)^{-k} d eta <= (M/2y)^{1-2k} / (2k - 1)
  auto tail_after = [&](double M) { return std::pow(M / two_y, 1.0 - 2.0 * k) / (2.0 * k - 1.0); };
  long long M = 0;
  constexpr long long kMaxTerms = 20'000'000;
  double sum = 0.0, comp = 0.0;
  while (M < kMaxTerms) {
    ++M;
    const double eta = M / two_y;
    const double term = std::exp(-k * std::log1p(eta * eta)) / two_y;
    const double s = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - s) + term : (term - s) + sum;
    sum = s;
    if (eta > 1.0 && tail_after(static_cast<double>(M)) <= 1e-10 * sum) break;
  }
  out.sum_value = sum + comp;
  out.sum_tail = tail_after(static_cast<double>(M));
  return out;
}

HorocycleComparison horocycle_sum_vs_gamma_ratio(int weight, double y) {
  if (weight < 2 || weight % 2) throw std::invalid_argument("horocycle_sum_vs_gamma_ratio: weight must be even >= 2");
  return horocycle_sum_vs_gamma_ratio_k(weight / 2, y);
}

SubgroupComparison subgroup_orbit_comparison(const std::vector<OrbitEntry>& orbit, const LogKernelTable& table, int N) {
  if (N < 1) throw std::invalid_argument("subgroup_orbit_comparison needs N >= 1");
  std::vector<double> full, sub;
  for (const auto& e : orbit) {
    const double v = std::exp(table(e.rho));
    full.push_back(v);
    if (is_in_gamma0(e.element, N)) sub.push_back(v);
  }
  return {neumaier(sub), neumaier(full), sub.size(), full.size()};
}

SubgroupComparison subgroup_orbit_comparison(const UpperHalfPoint& z, const HeatParams& p, int N, double rho_max,
                                             const QuadratureConfig& q) {
  const auto orbit = enumerate_orbit(z, rho_max);
  const LogKernelTable table(p, std::max(rho_max, orbit.empty() ? rho_max : orbit.back().rho), q);
  return subgroup_orbit_comparison(orbit, table, N);
}

}  // namespace supnorm
