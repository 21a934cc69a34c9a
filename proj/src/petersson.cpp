#include "supnorm/petersson.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "supnorm/parallel.hpp"

namespace supnorm {

namespace {

using LD = long double;
constexpr LD kPiL = std::numbers::pi_v<LD>;

void check_pair(const QExpansion& f, const QExpansion& g) {
  if (f.weight != g.weight) throw std::invalid_argument("petersson_inner: weights differ");
  if (!f.is_cusp_form() || !g.is_cusp_form()) throw std::invalid_argument("petersson_inner: both forms must be cusp forms");
  if (f.n_terms() < 1 || g.n_terms() < 1) throw std::invalid_argument("petersson_inner: empty expansion");
}

// Horner sum without the certificate; callers stay inside F where y >= sqrt(3)/2.
std::complex<LD> eval_raw(const QExpansion& f, LD x, LD y) {
  const LD r = std::exp(-2 * kPiL * y);
  const std::complex<LD> q = std::polar(r, 2 * kPiL * x);
  std::complex<LD> acc = 0;
  for (int n = f.n_terms(); n >= 1; --n) acc = (acc + f.coeffs[static_cast<std::size_t>(n - 1)]) * q;
  return acc + f.constant_term;
}

// int_1^inf e^{-4 pi n y} y^{w-2} dy
LD cusp_moment(int w, int n) {
  const LD a = w - 1;
  const LD x = 4 * kPiL * n;
  const LD log_q = std::log(boost::math::gamma_q(a, x));
  return std::exp(boost::math::lgamma(a) + log_q - a * std::log(x));
}

LD cusp_tail_bound(const QExpansion& f, const QExpansion& g, int N) {
  // I_n <= e^{-4 pi (n-1)} I_1 for y >= 1
  const LD scale = f.coeff_scale * g.coeff_scale * cusp_moment(f.weight, 1) * std::exp(4 * kPiL);
  return geometric_tail_bound(scale, f.coeff_exponent + g.coeff_exponent, N, std::exp(-4 * kPiL));
}

LD bottom_region(const QExpansion& f, const QExpansion& g, const QuadratureConfig& q, LD scale) {
  QuadratureConfig inner = q;
  inner.abs_tol = q.abs_tol * static_cast<double>(scale);
  inner.rel_tol = q.rel_tol / 10;
  QuadratureConfig outer = q;
  outer.abs_tol = q.abs_tol * static_cast<double>(scale);
  const int w = f.weight;
  auto column = [&](LD x) {
    const LD y0 = std::sqrt(1 - x * x);
    auto integrand = [&](LD y) {
      const auto a = eval_raw(f, x, y);
      const auto b = eval_raw(g, x, y);
      return (a.real() * b.real() + a.imag() * b.imag()) * std::pow(y, LD(w - 2));
    };
    return integrate<LD>(integrand, y0, LD(1), inner).value;
  };
  // real coefficients: the integrand at -x is the conjugate of the one at x
  return 2 * integrate<LD>(column, LD(0), LD(0.5), outer).value;
}

}  // namespace

long double petersson_cusp_part(const QExpansion& f, const QExpansion& g) {
  check_pair(f, g);
  const int N = std::min(f.n_terms(), g.n_terms());
  LD s = 0;
  for (int n = N; n >= 1; --n) {
    const LD ab = f.coeffs[static_cast<std::size_t>(n - 1)] * g.coeffs[static_cast<std::size_t>(n - 1)];
    if (ab != 0) s += ab * cusp_moment(f.weight, n);
  }
  return s;
}

std::complex<long double> petersson_inner(const QExpansion& f, const QExpansion& g, const QuadratureConfig& q) {
  check_pair(f, g);
  q.validate();
  const LD cusp = petersson_cusp_part(f, g);
  const LD scale = std::sqrt(std::abs(petersson_cusp_part(f, f)) * std::abs(petersson_cusp_part(g, g)));
  if (!(scale > 0)) throw std::invalid_argument("petersson_inner: zero form");
  const LD tail = cusp_tail_bound(f, g, std::min(f.n_terms(), g.n_terms()));
  const LD bottom = bottom_region(f, g, q, scale);
  const LD value = cusp + bottom;
  if (!(tail <= std::max<LD>(q.abs_tol * scale, q.rel_tol * std::abs(value)))) {
    throw QuadratureError("petersson_inner: coefficient tail bound exceeds tolerance; raise n_terms");
  }
  return {value, 0};
}

MatrixLD petersson_gram(const std::vector<QExpansion>& forms, const QuadratureConfig& q, int threads) {
  const std::size_t d = forms.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) pairs.emplace_back(i, j);
  }
  std::vector<LD> values(pairs.size());
  parallel_for(pairs.size(), threads > 0 ? threads : default_threads(), [&](std::size_t p) {
    values[p] = petersson_inner(forms[pairs[p].first], forms[pairs[p].second], q).real();
  });
  MatrixLD G(d, d);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[p];
    G(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = values[p];
  }
  return G;
}

DomainIntegral integrate_over_fundamental_domain(const std::function<long double(double, double)>& h,
                                                 const DomainRuleOptions& opts) {
  if (!(opts.y_max > 1.0) || opts.x_panels < 1 || !(opts.y_panel_ratio > 1.0)) {
    throw std::invalid_argument("integrate_over_fundamental_domain: bad options");
  }
  auto run = [&](auto rule) {
    using Rule = decltype(rule);
    LD total = 0;
    const LD dx = LD(1) / opts.x_panels;
    for (int px = 0; px < opts.x_panels; ++px) {
      const LD xa = -LD(0.5) + px * dx;
      auto column = [&](LD x) {
        const LD y0 = std::sqrt(1 - x * x);
        const LD ymax = opts.y_max;
        const int panels = std::max(1, static_cast<int>(std::ceil(std::log(ymax / y0) / std::log(LD(opts.y_panel_ratio)))));
        const LD ratio = std::pow(ymax / y0, LD(1) / panels);
        LD s = 0, lo = y0;
        for (int i = 0; i < panels; ++i) {
          const LD hi = i + 1 == panels ? ymax : lo * ratio;
          s += Rule::integrate([&](LD y) { return static_cast<LD>(h(static_cast<double>(x), static_cast<double>(y))) / (y * y); }, lo, hi);
          lo = hi;
        }
        return s;
      };
      total += Rule::integrate(column, xa, xa + dx);
    }
    return total;
  };
  const LD fine = run(boost::math::quadrature::gauss<LD, 20>{});
  const LD coarse = run(boost::math::quadrature::gauss<LD, 15>{});
  return {fine, std::abs(fine - coarse)};
}

long double petersson_inner_tensor(const QExpansion& f, const QExpansion& g, const DomainRuleOptions& opts) {
  check_pair(f, g);
  const int w = f.weight;
  return integrate_over_fundamental_domain(
             [&](double x, double y) {
               const auto a = eval_raw(f, x, y);
               const auto b = eval_raw(g, x, y);
               return (a.real() * b.real() + a.imag() * b.imag()) * std::pow(LD(y), LD(w));
             },
             opts)
      .value;
}

}  // namespace supnorm
