#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "supnorm/bounds.hpp"
#include "supnorm/scan.hpp"

using namespace supnorm;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// h(rho) without the u^2 substitution, double-exponential rules on the raw integrand
double h_oracle(double rho) {
  auto f = [&](double r) {
    const double gap = std::cosh(r) - std::cosh(rho);
    return gap <= 0.0 ? 0.0 : r * std::exp(-r / 2.0) / std::sqrt(gap);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  return ts.integrate(f, rho, rho + 1.0, 1e-14) + es.integrate([&](double u) { return f(rho + 1.0 + u); }, 1e-14);
}

const OrthonormalBasis& basis12() {
  static const OrthonormalBasis b = orthonormal_basis(12);
  return b;
}

}  // namespace

TEST_CASE("oracle: C_1 from Brent search vs dense grid at spacing 1e-4") {
  double dense = c_delta_ratio_limit();
  for (double rho = 1.0; rho <= 51.0; rho += 1e-4) dense = std::max(dense, c_delta_ratio(rho));
  CHECK(compute_c_delta(1.0) == Approx(dense).epsilon(1e-6));
}

TEST_CASE("oracle: h(1) vs raw double-exponential quadrature") {
  CHECK(h_function(1.0) == Approx(h_oracle(1.0)).epsilon(1e-6));
  CHECK(h_function(0.3) == Approx(h_oracle(0.3)).epsilon(1e-6));
  CHECK(base_integral().value == Approx(h_oracle(0.0)).epsilon(1e-6));
}

TEST_CASE("C_delta") {
  const double c1 = compute_c_delta(1.0), c2 = compute_c_delta(2.0);
  CHECK(c1 >= c_delta_ratio_limit());
  CHECK(c2 <= c1);
  const double c01 = compute_c_delta(0.1), c001 = compute_c_delta(0.01);
  CHECK(c01 > c1);
  CHECK(c001 > 10.0 * c01);
  CHECK(c_delta_ratio_limit() == Approx(2.0 * std::sqrt(2.0 * std::log(4.0)) + 0.5).epsilon(1e-12));
  CHECK_THROWS_AS(c_delta_ratio(0.0), std::domain_error);
}

TEST_CASE("h function") {
  const double base = base_integral().value;
  CHECK(base > 0.0);
  CHECK(base <= 2.0 * std::sqrt(2.0));
  QuadratureConfig tight;
  tight.rel_tol = 1e-12;
  CHECK(base_integral(tight).value == Approx(base).epsilon(1e-8));
  double prev = base;
  for (int i = 1; i <= 50; ++i) {
    const double h = h_function(0.1 * i);
    CHECK(h < prev);
    CHECK(h <= 2.0 * std::sqrt(2.0));
    prev = h;
  }
}

TEST_CASE("cusp strip maximizer") {
  CHECK(cusp_strip_maximizer(12) == Approx(3.0 / kPi).epsilon(1e-15));
  for (int w : {12, 40}) {
    const double y = cusp_strip_maximizer(w);
    auto g = [w](double v) { return w * std::log(v) - 4.0 * kPi * v; };
    CHECK(g(y) > g(y + 0.1));
    CHECK(g(y) > g(y - 0.1));
    CHECK(g(y + 1.0) > g(y + 2.0));
  }
}

TEST_CASE("horocycle series vs Gamma-ratio integral") {
  CHECK(horocycle_sum_vs_gamma_ratio_k(1, 1.0).integral_bound == Approx(kPi / 2.0).epsilon(1e-14));
  for (int k : {1, 5, 20, 60}) {
    for (double y : {0.5, 5.0, k / (2.0 * kPi)}) {
      const auto h = horocycle_sum_vs_gamma_ratio_k(k, y);
      CHECK(h.sum_value > 0.0);
      CHECK(h.sum_value <= h.integral_bound);
    }
  }
  CHECK(horocycle_sum_vs_gamma_ratio_k(1000, 1.0).integral_bound * std::sqrt(1000.0) ==
        Approx(std::sqrt(kPi) / 2.0).epsilon(0.05));
  const auto a = horocycle_sum_vs_gamma_ratio(24, 2.0), b = horocycle_sum_vs_gamma_ratio_k(12, 2.0);
  CHECK(a.sum_value == b.sum_value);
}

TEST_CASE("explicit orbit bound dominates the Bergman kernel") {
  BoundConfig cfg;
  const auto b24 = orthonormal_basis(24);
  for (const UpperHalfPoint z : {UpperHalfPoint(0.1, 1.0), UpperHalfPoint(0.3, 1.4), UpperHalfPoint(0.0, 2.0)}) {
    CHECK(bergman_kernel_diag(12, z, basis12()) <= explicit_bound(12, z, cfg).value);
    CHECK(bergman_kernel_diag(24, z, b24) <= explicit_bound(24, z, cfg).value);
  }
}

TEST_CASE("explicit bound: cusp translates dominate, truncation consistent") {
  BoundConfig cfg;
  const UpperHalfPoint z(0.2, 10.0);
  const auto orbit = enumerate_orbit(z, cfg.rho_max);
  const double full = explicit_bound(12, orbit, cfg).value;
  const double translates = explicit_bound_translation_part(12, orbit, cfg).value;
  CHECK(std::abs(full - translates) < 0.01 * full);

  const UpperHalfPoint w(0.3, 1.4);
  BoundConfig wide = cfg;
  wide.rho_max = 12.0;
  const auto a = explicit_bound(24, w, cfg), b = explicit_bound(24, w, wide);
  CHECK(b.value >= a.value);
  CHECK(b.value - a.value <= a.tail_bound);
  CHECK(b.tail_bound < a.tail_bound);
}

TEST_CASE("bound config validation") {
  BoundConfig bad;
  bad.rho_max = 0.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  BoundConfig low;
  low.c_delta = 1.0;
  CHECK_THROWS_AS(low.validate(), std::invalid_argument);
  CHECK_THROWS_AS(explicit_bound(11, UpperHalfPoint(0.0, 1.0), BoundConfig{}), std::invalid_argument);
}

TEST_CASE("subgroup orbit sums") {
  const UpperHalfPoint z(0.3, 1.4);
  const HeatParams p{2, 1.0};
  const auto one = subgroup_orbit_comparison(z, p, 1, 8.0);
  CHECK(one.sub_sum == one.full_sum);
  CHECK(one.sub_terms == one.full_terms);
  const auto two = subgroup_orbit_comparison(z, p, 2, 8.0);
  CHECK(two.sub_sum < two.full_sum);
  CHECK(two.sub_terms < two.full_terms);
  const auto four = subgroup_orbit_comparison(z, p, 4, 8.0);
  CHECK(four.sub_sum <= two.sub_sum);
}

TEST_CASE("growth fit") {
  std::vector<std::pair<double, double>> pts, lin;
  for (double k : {6.0, 8.0, 10.0, 14.0, 30.0}) {
    pts.emplace_back(k, 7.0 * std::pow(k, 1.5));
    lin.emplace_back(k, 3.0 * k);
  }
  const auto f = growth_fit(pts);
  CHECK(std::abs(f.slope - 1.5) < 1e-12);
  CHECK(f.intercept == Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(f.residual < 1e-12);
  CHECK(growth_fit(lin).slope == Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(growth_fit({{1.0, 1.0}, {2.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(growth_fit({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
}

TEST_CASE("scan: sup is the grid maximum and stable under refinement") {
  const auto coarse = supnorm_scan(12, Region::compact(2.0), {50, 50, false}, basis12());
  const auto fine = supnorm_scan(12, Region::compact(2.0), {100, 100, false}, basis12());
  CHECK(coarse.points.size() == 2500);
  double mx = 0.0;
  for (const auto& p : fine.points) mx = std::max(mx, p.value);
  CHECK(fine.sup_value == mx);
  CHECK(fine.sup_value == Approx(coarse.sup_value).epsilon(0.01));
  CHECK(hyperbolic_distance(fine.argmax, coarse.argmax) < 0.1);
  const auto refined = supnorm_scan(12, Region::compact(2.0), {50, 50, true}, basis12());
  CHECK(refined.sup_value >= coarse.sup_value);
  for (const auto& p : fine.points) CHECK(fine.region.contains(p.x, p.y, 12));
}

TEST_CASE("scan: thread count does not change results") {
  const auto a = supnorm_scan(12, Region::fundamental(), {40, 40, true}, basis12(), 1);
  const auto b = supnorm_scan(12, Region::fundamental(), {40, 40, true}, basis12(), 3);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].value == b.points[i].value);
  CHECK(a.argmax == b.argmax);
}

TEST_CASE("scan: validation") {
  CHECK_THROWS_AS(supnorm_scan(11, Region::compact(2.0), {}, basis12()), std::invalid_argument);
  CHECK_THROWS_AS(supnorm_scan(12, Region::strip(1.0, 0.3, 2.0), {}, basis12()), std::invalid_argument);
  CHECK_THROWS_AS(supnorm_scan(12, Region::compact(2.0), {1, 5, false}, basis12()), std::invalid_argument);
  CHECK(Region::fundamental().top(12) == Approx(6.0 / (2.0 * kPi) + 1.0));
}

TEST_CASE("geodesic midpoint") {
  const UpperHalfPoint z(0.0, 1.0), w(0.0, 4.0);
  const auto m = geodesic_midpoint(z, w);
  CHECK(m.x() == Approx(0.0).scale(1.0));
  CHECK(m.y() == Approx(2.0));
  const UpperHalfPoint p(0.3, 1.1), q(-0.2, 2.7);
  const auto mid = geodesic_midpoint(p, q);
  CHECK(hyperbolic_distance(p, mid) == Approx(hyperbolic_distance(q, mid)).epsilon(1e-10));
  CHECK(2.0 * hyperbolic_distance(p, mid) == Approx(hyperbolic_distance(p, q)).epsilon(1e-10));
}
