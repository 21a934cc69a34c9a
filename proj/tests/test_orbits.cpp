#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "supnorm/orbits.hpp"

using namespace supnorm;
using doctest::Approx;

namespace {

// All canonical matrices with |entries| <= bound and d(z, gz) <= rho_max.
std::set<GroupElement> brute_force_orbit(const UpperHalfPoint& z, double rho_max, int bound) {
  std::set<GroupElement> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          const GroupElement g(a, b, c, d);
          const auto gz = mobius_apply(g, z);
          const double ch = 1.0 + std::norm(gz.z() - z.z()) / (2.0 * gz.y() * z.y());
          if (std::acosh(ch) <= rho_max) out.insert(g);
        }
  return out;
}

std::set<GroupElement> elements(const std::vector<OrbitEntry>& orbit) {
  std::set<GroupElement> s;
  for (const auto& e : orbit) s.insert(e.element);
  return s;
}

}  // namespace

TEST_CASE("oracle: both strategies match a brute-force matrix sweep") {
  const UpperHalfPoint pts[] = {{0.0, 1.0}, {0.0, 2.0}, {0.3, 1.4}, {0.1, 1.1}, {-0.5, std::sqrt(3.0) / 2.0}};
  for (const auto& z : pts) {
    const auto oracle = brute_force_orbit(z, 2.5, 12);
    OrbitOptions bfs, sweep;
    bfs.strategy = EnumerationStrategy::GeneratorBfs;
    sweep.strategy = EnumerationStrategy::EntrySweep;
    CHECK(elements(enumerate_orbit(z, 2.5, sweep)) == oracle);
    CHECK(elements(enumerate_orbit(z, 2.5, bfs)) == oracle);
  }
}

TEST_CASE("oracle: displacement matches the distance to g z") {
  const UpperHalfPoint z(0.27, 1.31);
  for (const auto& e : enumerate_orbit(z, 5.0)) {
    CHECK(e.rho == Approx(hyperbolic_distance(z, mobius_apply(e.element, z))).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("enumerate_orbit examples") {
  const auto a = enumerate_orbit(UpperHalfPoint(0.0, 2.0), 0.1);
  REQUIRE(a.size() == 1);
  CHECK(a[0].element.is_identity());
  const auto b = enumerate_orbit(UpperHalfPoint(0.0, 1.0), 0.1);
  REQUIRE(b.size() == 2);
  CHECK(elements(b) == std::set<GroupElement>{GroupElement::identity(), GroupElement::S()});
}

TEST_CASE("orbit entries: sorted, unit phases, identity phase 1") {
  const UpperHalfPoint z(0.3, 1.4);
  const auto orbit = enumerate_orbit(z, 7.0);
  CHECK(std::is_sorted(orbit.begin(), orbit.end(), [](const OrbitEntry& p, const OrbitEntry& q) {
    return p.rho < q.rho || (p.rho == q.rho && p.element < q.element);
  }));
  for (const auto& e : orbit) {
    CHECK(std::abs(std::abs(e.phase) - 1.0) < 1e-12);
    CHECK(e.rho >= 0.0);
  }
  CHECK(orbit.front().element.is_identity());
  CHECK(std::abs(orbit.front().phase - 1.0) < 1e-15);
}

TEST_CASE("orbit enumeration is independent of the thread count") {
  const UpperHalfPoint z(0.11, 1.7);
  OrbitOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = enumerate_orbit(z, 8.0, one);
  const auto b = enumerate_orbit(z, 8.0, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].element == b[i].element);
    CHECK(a[i].rho == b[i].rho);
  }
}

TEST_CASE("counting function") {
  CHECK(counting_function(UpperHalfPoint(0.0, 2.0), 0.1) == 1);
  CHECK(counting_function(UpperHalfPoint(0.0, 1.0), 0.1) == 2);
  // N(rho) e^{-rho} stays bounded
  const auto orbit = enumerate_orbit(UpperHalfPoint(0.0, 2.0), 10.0);
  const double c = counting_constant(orbit);
  CHECK(c > 1.0);
  CHECK(c < 10.0);
}

TEST_CASE("limits") {
  OrbitOptions tight;
  tight.rho_cap = 5.0;
  CHECK_THROWS_AS(enumerate_orbit(UpperHalfPoint(0.0, 1.0), 6.0, tight), OrbitLimitError);
  OrbitOptions few;
  few.max_entries = 10;
  CHECK_THROWS_AS(enumerate_orbit(UpperHalfPoint(0.0, 1.0), 6.0, few), OrbitLimitError);
  CHECK_THROWS_AS(enumerate_orbit(UpperHalfPoint(0.0, 1.0), -1.0), std::invalid_argument);
}

TEST_CASE("group elements") {
  CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), std::invalid_argument);
  const GroupElement g(-1, 0, 0, -1);
  CHECK(g.is_identity());
  const GroupElement s = GroupElement::S();
  CHECK((s * s).is_identity());
  const GroupElement st = s * GroupElement::T();
  CHECK((st * st * st).is_identity());
  const GroupElement h(2, 1, 7, 4);
  CHECK((h * h.inverse()).is_identity());
  const auto big = GroupElement::Int(1) << 40;
  const GroupElement tb = GroupElement::T(big);
  CHECK_THROWS_AS(tb * GroupElement(1, 0, big, 1) * tb, std::overflow_error);
}

TEST_CASE("subgroup predicates") {
  for (long long n : {1, 2, 7}) CHECK(is_in_gamma0(GroupElement::identity(), n));
  CHECK_FALSE(is_in_gamma0(GroupElement::S(), 2));
  CHECK(is_in_gamma0(GroupElement(1, 0, 2, 1), 2));
  CHECK(is_in_gamma_inf(GroupElement::T(), 1));
  CHECK_FALSE(is_in_gamma_inf(GroupElement::T(), 2));
  CHECK(is_in_gamma_inf(GroupElement::T(4), 2));
  for (long long w : {1, 2, 5}) CHECK_FALSE(is_in_gamma_inf(GroupElement::S(), w));
  CHECK_THROWS_AS(is_in_gamma0(GroupElement::S(), 0), std::invalid_argument);
}
