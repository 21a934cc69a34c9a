#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "supnorm/geometry.hpp"

using namespace supnorm;
using doctest::Approx;

namespace {

// cosh d(z, w) straight from the definition, no half-angle forms
double cosh_distance_oracle(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  return 1.0 + std::norm(z.z() - w.z()) / (2.0 * z.y() * w.y());
}

}  // namespace

TEST_CASE("oracle: distance formulas agree with the textbook cosh formula") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 5.0);
  for (int i = 0; i < 500; ++i) {
    const UpperHalfPoint z(ux(rng), uy(rng)), w(ux(rng), uy(rng));
    const double ch = cosh_distance_oracle(z, w);
    CHECK(2.0 * cosh_sq_half_distance(z, w) - 1.0 == Approx(ch).epsilon(1e-12));
    CHECK(2.0 * sinh_sq_half_distance(z, w) + 1.0 == Approx(ch).epsilon(1e-12));
    CHECK(hyperbolic_distance(z, w) == Approx(std::acosh(ch)).epsilon(1e-9));
  }
}

TEST_CASE("oracle: reduction lands in the closed domain and g maps z to the result") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-20.0, 20.0), ly(-6.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const UpperHalfPoint z(ux(rng), std::exp(ly(rng)));
    const auto [w, g] = reduce_to_fundamental_domain(z);
    CHECK(w.x() >= -0.5);
    CHECK(w.x() < 0.5);
    CHECK(std::norm(w.z()) >= 1.0 - 1e-12);
    const auto gz = mobius_apply(g, z);
    CHECK(gz.x() == Approx(w.x()).epsilon(1e-9));
    CHECK(gz.y() == Approx(w.y()).epsilon(1e-9));
    CHECK(distance_lower_bound_to_fundamental_domain(w) == 0.0);
  }
}

TEST_CASE("UpperHalfPoint rejects bad coordinates") {
  CHECK_THROWS_AS(UpperHalfPoint(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(UpperHalfPoint(NAN, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(UpperHalfPoint(0.0, INFINITY), std::invalid_argument);
}

TEST_CASE("mobius_apply examples") {
  const UpperHalfPoint z(0.3, 1.7);
  CHECK(mobius_apply(GroupElement::identity(), z) == z);
  const auto si = mobius_apply(GroupElement::S(), UpperHalfPoint(0.0, 1.0));
  CHECK(si.x() == Approx(0.0));
  CHECK(si.y() == Approx(1.0));
  const auto ti = mobius_apply(GroupElement::T(), UpperHalfPoint(0.0, 1.0));
  CHECK(ti.x() == Approx(1.0));
  CHECK(ti.y() == Approx(1.0));
}

TEST_CASE("distance examples") {
  const UpperHalfPoint i(0.0, 1.0);
  CHECK(cosh_sq_half_distance(i, i) == Approx(1.0));
  CHECK(cosh_sq_half_distance(i, UpperHalfPoint(0.0, 2.0)) == Approx(9.0 / 8.0));
  CHECK(cosh_sq_half_distance(i, UpperHalfPoint(1.0, 1.0)) == Approx(5.0 / 4.0));
  CHECK(hyperbolic_distance(i, i) == 0.0);
  CHECK(hyperbolic_distance(i, UpperHalfPoint(0.0, 2.0)) == Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("distance is accurate for nearby points") {
  const UpperHalfPoint z(0.2, 1.3), w(0.2 + 1e-9, 1.3);
  CHECK(hyperbolic_distance(z, w) == Approx(1e-9 / 1.3).epsilon(1e-6));
}

TEST_CASE("reduction examples") {
  {
    const auto [w, g] = reduce_to_fundamental_domain(UpperHalfPoint(5.0, 1.0));
    CHECK(w.x() == Approx(0.0));
    CHECK(w.y() == Approx(1.0));
    CHECK(g == GroupElement::T(-5));
  }
  {
    const auto [w, g] = reduce_to_fundamental_domain(UpperHalfPoint(0.0, 0.5));
    CHECK(w.x() == Approx(0.0));
    CHECK(w.y() == Approx(2.0));
    CHECK(g == GroupElement::S());
  }
  {
    const UpperHalfPoint z(0.1, 1.3);
    const auto [w, g] = reduce_to_fundamental_domain(z);
    CHECK(w == z);
    CHECK(g.is_identity());
  }
  {
    // x = +1/2 is sent to x = -1/2
    const auto [w, g] = reduce_to_fundamental_domain(UpperHalfPoint(0.5, 2.0));
    CHECK(w.x() == Approx(-0.5));
    CHECK(g == GroupElement::T(-1));
  }
}

TEST_CASE("hyperbolic volume") {
  CHECK(hyperbolic_volume(SurfaceData::modular_group()) == Approx(std::numbers::pi / 3.0).epsilon(1e-14));
  CHECK(hyperbolic_volume({2, 0, {}}) == Approx(4.0 * std::numbers::pi));
  CHECK_THROWS_AS(hyperbolic_volume({0, 0, {}}), std::domain_error);
  CHECK_THROWS_AS(hyperbolic_volume({0, 1, {1}}), std::domain_error);
}

TEST_CASE("distance lower bound to the fundamental domain") {
  // lower bound never exceeds the true distance to the reduced representative's domain
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const UpperHalfPoint w(ux(rng), uy(rng));
    const double lb = distance_lower_bound_to_fundamental_domain(w);
    CHECK(lb >= 0.0);
    // the domain point (clamped x, above the arc) is at least lb away
    const double cx = std::clamp(w.x(), -0.5, 0.5);
    const UpperHalfPoint p(cx, std::max(w.y(), std::sqrt(1.0 - cx * cx) + 1e-12));
    CHECK(lb <= hyperbolic_distance(w, p) + 1e-12);
  }
}
