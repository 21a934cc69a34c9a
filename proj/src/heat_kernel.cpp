#include "supnorm/heat_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "supnorm/numerics.hpp"
#include "supnorm/parallel.hpp"

namespace supnorm {

namespace {

constexpr double kPi = std::numbers::pi;

// Integrates exp(log_f) over [lo, hi] after normalizing by the sampled peak.
template <class LogF>
LogQuantity log_integral(LogF&& log_f, double lo, double hi, const QuadratureConfig& q) {
  constexpr int kSamples = 256;
  double peak = -INFINITY;
  double arg_peak = lo;
  for (int i = 0; i <= kSamples; ++i) {
    const double u = lo + (hi - lo) * i / kSamples;
    const double v = log_f(u);
    if (v > peak) {
      peak = v;
      arg_peak = u;
    }
  }
  if (!std::isfinite(peak)) throw QuadratureError("log integrand is not finite at any sample");
  std::vector<double> breaks{lo};
  // bracket the peak tightly so the adaptive rule sees its shape from the start
  const double h = (hi - lo) / kSamples;
  for (double b : {arg_peak - h, arg_peak, arg_peak + h}) {
    if (b > breaks.back() && b < hi) breaks.push_back(b);
  }
  breaks.push_back(hi);
  auto f = [&](double u) { return std::exp(log_f(u) - peak); };
  const auto res = integrate<double>(f, breaks, q);
  if (!(res.value > 0.0)) throw QuadratureError("integral of a positive integrand came out non-positive");
  return {peak + std::log(res.value), res.error / res.value};
}

double auto_extent(const QuadratureConfig& q, double scale) {
  // Gaussian with variance ~ scale/2: drop by log(1/abs_tol) + 5 nats
  return std::sqrt(scale * (std::log(1.0 / q.abs_tol) + 5.0));
}

double log_heat_prefactor(double t) { return 0.5 * std::log(2.0) - t / 4.0 - 1.5 * std::log(4.0 * kPi * t); }

}  // namespace

void HeatParams::validate() const {
  if (k < 1) throw std::invalid_argument("heat kernel needs k >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("heat time t must be positive");
}

double LogQuantity::value() const { return std::exp(log_value); }

double chebyshev_T2k_log1p(int k, double delta) {
  if (!(delta >= 0.0)) throw std::domain_error("chebyshev_T2k_log: X must be >= 1");
  const double theta = num::acosh1p(delta);
  const double a = 2.0 * k * theta;
  // log cosh a = a + log((1 + e^{-2a}) / 2)
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double chebyshev_T2k_log(int k, double X) {
  if (!(X >= 1.0)) throw std::domain_error("chebyshev_T2k_log: X must be >= 1");
  return chebyshev_T2k_log1p(k, X - 1.0);
}

LogQuantity log_heat_kernel_point(const HeatParams& p, double rho, const QuadratureConfig& q) {
  p.validate();
  q.validate();
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("heat kernel needs rho >= 0");
  const int k = p.k;
  const double t = p.t;
  const double r_peak = std::max(rho, 2.0 * k * t);
  const double r_max = q.r_max_policy.kind == RMaxPolicy::Kind::Fixed
                           ? std::max(q.r_max_policy.value, rho + 1e-3)
                           : r_peak + auto_extent(q, 8.0 * t);

  LogQuantity integral;
  if (rho == 0.0) {
    // (cosh r - 1)^{-1/2} = 1/(sqrt2 sinh(r/2)), T_2k(cosh(r/2)) = cosh(kr)
    auto log_f = [&](double r) {
      return std::log(2.0) + num::log_x_over_sinh(r / 2.0) - 0.5 * std::log(2.0) - r * r / (4.0 * t) +
             num::log_cosh(k * r);
    };
    integral = log_integral(log_f, 0.0, r_max, q);
  } else {
    // r = rho + u^2, s = u^2/2:
    // 2u dr-Jacobian / sqrt(cosh r - cosh rho) = 2 sqrt(s/sinh s) / sqrt(sinh(rho + s))
    const double half_rho_cosh = std::cosh(rho / 2.0);
    auto log_f = [&](double u) {
      const double s = 0.5 * u * u;
      const double r = rho + u * u;
      const double delta = 2.0 * std::sinh((r + rho) / 4.0) * std::sinh(u * u / 4.0) / half_rho_cosh;
      return std::log(r) - r * r / (4.0 * t) + chebyshev_T2k_log1p(k, delta) + std::log(2.0) +
             0.5 * num::log_x_over_sinh(s) - 0.5 * num::log_sinh(rho + s);
    };
    integral = log_integral(log_f, 0.0, std::sqrt(r_max - rho), q);
  }
  return {log_heat_prefactor(t) + integral.log_value, integral.rel_error};
}

double heat_kernel_point(const HeatParams& p, double rho, const QuadratureConfig& q) {
  return log_heat_kernel_point(p, rho, q).value();
}

double f_k_defect_normalized(const HeatParams& p, double rho, double r) {
  p.validate();
  if (!(rho > 0.0) || !(r >= rho)) throw std::domain_error("f_k_defect needs 0 < rho <= r");
  const int k = p.k;
  const double t = p.t;
  const double delta = 2.0 * std::sinh((r + rho) / 4.0) * std::sinh((r - rho) / 4.0) / std::cosh(rho / 2.0);
  const double theta = num::acosh1p(delta);
  // T'_2k / T_2k = 2k tanh(2k theta) / sinh(theta) -> 4k^2 as theta -> 0
  const double ratio =
      theta < 1e-8 ? 4.0 * k * k : 2.0 * k * std::tanh(2.0 * k * theta) / std::sinh(theta);
  const double first = std::sinh(rho) * (1.0 / r - r / (2.0 * t) - 1.0 / std::tanh(r));
  const double ch_rho = std::cosh(rho / 2.0);
  // -cosh^2(r/2) + cosh^2(rho/2) = -sinh((r+rho)/2) sinh((r-rho)/2)
  const double bracket = std::sinh(r / 2.0) * std::sinh(rho / 2.0) / (ch_rho * ch_rho) *
                         (-std::sinh((r + rho) / 2.0) * std::sinh((r - rho) / 2.0));
  return first + ratio * bracket;
}

double f_k_defect(const HeatParams& p, double rho, double r) {
  const double normalized = f_k_defect_normalized(p, rho, r);
  const double delta = 2.0 * std::sinh((r + rho) / 4.0) * std::sinh((r - rho) / 4.0) / std::cosh(rho / 2.0);
  const double log_factor = std::log(r) - r * r / (4.0 * p.t) - num::log_sinh(r) + chebyshev_T2k_log1p(p.k, delta);
  return normalized * std::exp(log_factor);
}

LogQuantity log_g_k_envelope(const HeatParams& p, const QuadratureConfig& q) {
  p.validate();
  q.validate();
  const int k = p.k;
  const double t = p.t;
  const double r_max = q.r_max_policy.kind == RMaxPolicy::Kind::Fixed ? q.r_max_policy.value
                                                                      : 4.0 * k * t + auto_extent(q, 16.0 * t);
  // r / sinh(r/2) = 2 (r/2)/sinh(r/2), finite at r = 0
  auto log_f = [&](double r) {
    return std::log(2.0) + num::log_x_over_sinh(r / 2.0) - r * r / (8.0 * t) + num::log_cosh(k * r);
  };
  const auto integral = log_integral(log_f, 0.0, r_max, q);
  return {-t / 4.0 - 1.5 * std::log(4.0 * kPi * t) + integral.log_value, integral.rel_error};
}

double g_k_envelope(const HeatParams& p, const QuadratureConfig& q) { return log_g_k_envelope(p, q).value(); }

LogKernelTable::LogKernelTable(const HeatParams& p, double rho_max, const QuadratureConfig& q, double tol, int threads)
    : rho_max_(rho_max) {
  p.validate();
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw std::invalid_argument("LogKernelTable needs rho_max > 0");
  const int workers = threads > 0 ? threads : default_threads();
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::size_t panels = static_cast<std::size_t>(std::ceil(rho_max_ / width_));
    std::vector<double> pts;
    for (std::size_t i = 0; i < panels; ++i) {
      const double a = i * width_;
      for (int j = 0; j <= kNodes; ++j) pts.push_back(a + width_ * 0.5 * (1.0 - std::cos(kPi * j / kNodes)));
    }
    const std::size_t n_nodes = pts.size();
    for (std::size_t i = 0; i < panels; ++i) {
      for (double frac : {0.3141, 0.7317}) pts.push_back((i + frac) * width_);
    }
    std::vector<double> logs(pts.size());
    parallel_for(pts.size(), workers, [&](std::size_t j) { logs[j] = log_heat_kernel_point(p, pts[j], q).log_value; });
    values_.assign(logs.begin(), logs.begin() + static_cast<std::ptrdiff_t>(n_nodes));
    max_log_error_ = 0.0;
    for (std::size_t j = n_nodes; j < pts.size(); ++j) {
      max_log_error_ = std::max(max_log_error_, std::abs((*this)(pts[j]) - logs[j]));
    }
    if (max_log_error_ <= tol) return;
    width_ /= 2.0;
  }
  throw QuadratureError("LogKernelTable: interpolation check failed (" + std::to_string(max_log_error_) + ")");
}

double LogKernelTable::operator()(double rho) const {
  const std::size_t panels = values_.size() / (kNodes + 1);
  if (!(rho >= 0.0) || rho > panels * width_) throw std::out_of_range("LogKernelTable: rho outside table");
  const std::size_t i = std::min(panels - 1, static_cast<std::size_t>(rho / width_));
  const double a = i * width_;
  // barycentric form on Chebyshev points of the second kind
  const double x = 1.0 - 2.0 * (rho - a) / width_;
  const double* v = values_.data() + i * (kNodes + 1);
  double num = 0.0, den = 0.0;
  for (int j = 0; j <= kNodes; ++j) {
    const double xj = std::cos(kPi * j / kNodes);
    const double diff = x - xj;
    if (diff == 0.0) return v[j];
    double w = (j % 2 ? -1.0 : 1.0) / diff;
    if (j == 0 || j == kNodes) w *= 0.5;
    num += w * v[j];
    den += w;
  }
  return num / den;
}

double orbit_heat_sum(const HeatParams& p, const std::vector<OrbitEntry>& orbit, const QuadratureConfig& q,
                      int threads) {
  std::vector<double> terms(orbit.size());
  parallel_for(orbit.size(), threads > 0 ? threads : default_threads(),
               [&](std::size_t i) { terms[i] = heat_kernel_point(p, orbit[i].rho, q); });
  double sum = 0.0, comp = 0.0;
  for (double v : terms) {
    const double s = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return sum + comp;
}

double orbit_heat_sum(const LogKernelTable& table, const std::vector<OrbitEntry>& orbit) {
  double sum = 0.0, comp = 0.0;
  for (const auto& e : orbit) {
    const double v = std::exp(table(e.rho));
    const double s = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return sum + comp;
}

double heat_orbit_tail_bound(const HeatParams& p, double rho_max, double counting_constant,
                             const QuadratureConfig& q, double tail_window) {
  p.validate();
  const double t = p.t;
  const double R = rho_max;

  // envelope route: K <= e^{-rho^2/8t} G, and -rho^2/8t + rho = -(rho - 4t)^2/8t + 2t
  const auto log_g = log_g_k_envelope(p, q);
  auto log_env_integral = [&](double from) {
    const double z = (from - 4.0 * t) / std::sqrt(8.0 * t);
    return 2.0 * t + 0.5 * std::log(2.0 * kPi * t) + std::log(std::erfc(z));
  };
  const double log_envelope_tail =
      log_g.log_value + num::log_add_exp(-R * R / (8.0 * t) + R, log_env_integral(R));
  const double envelope_tail = counting_constant * std::exp(log_envelope_tail) * (1.0 + 10.0 * log_g.rel_error);

  // direct route on [R, W], envelope beyond; W grows until the envelope part is negligible
  double direct_tail = INFINITY;
  try {
    const auto k_at_r = log_heat_kernel_point(p, R, q);
    const double scale = k_at_r.log_value + R;
    auto far_at = [&](double w) { return log_g.log_value + log_env_integral(w) - scale; };
    double W = R + tail_window;
    while (far_at(W) > std::log(1e-8) && W < R + 400.0) W += 5.0;
    double worst_rel = k_at_r.rel_error;
    auto f = [&](double rho) {
      const auto kv = log_heat_kernel_point(p, rho, q);
      worst_rel = std::max(worst_rel, kv.rel_error);
      return std::exp(kv.log_value + rho - scale);
    };
    QuadratureConfig outer = q;
    outer.rel_tol = std::max(q.rel_tol, 1e-6);
    outer.abs_tol = 1e-12;
    std::vector<double> breaks;
    for (double b = R; b < W; b += 1.0) breaks.push_back(b);
    breaks.push_back(W);
    const auto win = integrate<double>(f, breaks, outer);
    const double normalized = 1.0 + win.value + win.error + std::exp(far_at(W));
    direct_tail = counting_constant * std::exp(scale + std::log(normalized)) * (1.0 + 10.0 * worst_rel);
  } catch (const QuadratureError&) {
    // fall back to the envelope
  }
  return std::min(envelope_tail, direct_tail);
}

ComplexTruncatedValue automorphic_heat_kernel_diag(const HeatParams& p, const std::vector<OrbitEntry>& orbit,
                                                   double rho_max, const QuadratureConfig& q,
                                                   const AutomorphicKernelOptions& opts) {
  p.validate();
  const int threads = opts.orbit.threads > 0 ? opts.orbit.threads : default_threads();
  // equal displacements are adjacent in sorted order; evaluate each distinct rho once
  std::vector<std::size_t> first_of(orbit.size());
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i == 0 || orbit[i].rho != orbit[i - 1].rho) distinct.push_back(i);
    first_of[i] = distinct.size() - 1;
  }
  std::vector<double> log_k(distinct.size());
  double table_error = 0.0;
  if (opts.tabulate && !orbit.empty()) {
    const LogKernelTable table(p, std::max(rho_max, orbit.back().rho), q, 1e-11, threads);
    table_error = table.max_log_error();
    for (std::size_t j = 0; j < distinct.size(); ++j) log_k[j] = table(orbit[distinct[j]].rho);
  } else {
    parallel_for(distinct.size(), threads,
                 [&](std::size_t j) { log_k[j] = log_heat_kernel_point(p, orbit[distinct[j]].rho, q).log_value; });
  }
  for (double v : log_k) {
    if (v > 700.0) throw std::overflow_error("automorphic kernel terms exceed double range (k^2 t too large)");
  }

  std::complex<double> sum{}, comp{};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const std::complex<double> term = std::pow(orbit[i].phase, p.k) * std::exp(log_k[first_of[i]]);
    // Neumaier summation, componentwise
    const std::complex<double> s = sum + term;
    auto fix = [](double a, double b, double sab) {
      return std::abs(a) >= std::abs(b) ? (a - sab) + b : (b - sab) + a;
    };
    comp += std::complex<double>(fix(sum.real(), term.real(), s.real()), fix(sum.imag(), term.imag(), s.imag()));
    sum = s;
  }
  const double a = opts.counting_safety * counting_constant(orbit);
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < orbit.size(); ++i) abs_sum += std::exp(log_k[first_of[i]]);
  // interpolation discrepancy, applied to every term
  const double table_slack = std::expm1(2.0 * table_error) * abs_sum;
  return {sum + comp, heat_orbit_tail_bound(p, rho_max, a, q, opts.tail_window) + table_slack};
}

ComplexTruncatedValue automorphic_heat_kernel_diag(const HeatParams& p, const UpperHalfPoint& z, double rho_max,
                                                   const QuadratureConfig& q, const AutomorphicKernelOptions& opts) {
  const auto orbit = enumerate_orbit(z, rho_max, opts.orbit);
  return automorphic_heat_kernel_diag(p, orbit, rho_max, q, opts);
}

LaplacePair laplace_identity(double a, double b, const QuadratureConfig& q) {
  if (!(a > 0.0) || !(b >= 0.0)) throw std::invalid_argument("laplace_identity needs a > 0, b >= 0");
  q.validate();
  // t = s^2: integral = int_0^inf 2 exp(-a^2 s^2 - b^2/(4 s^2)) ds, peak value e^{-ab} at s^2 = b/(2a)
  const double s_peak = std::sqrt(b / (2.0 * a));
  const double s_max = std::sqrt((a * b + std::log(1.0 / q.abs_tol) + 40.0)) / a;
  auto f = [&](double s) {
    if (s == 0.0) return b == 0.0 ? 2.0 : 0.0;
    return 2.0 * std::exp(-a * a * s * s - b * b / (4.0 * s * s) + a * b);
  };
  std::vector<double> breaks{0.0};
  if (s_peak > 0.0 && s_peak < s_max) breaks.push_back(s_peak);
  breaks.push_back(s_max);
  const auto res = integrate<double>(f, breaks, q);
  const double scale = std::exp(-a * b);
  return {res.value * scale, std::sqrt(kPi) / a * scale, res.error * scale};
}

}  // namespace supnorm
