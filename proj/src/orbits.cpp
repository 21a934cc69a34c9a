#include "supnorm/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "supnorm/parallel.hpp"

namespace supnorm {

namespace {

using Int = GroupElement::Int;

// d^{-1} mod c for gcd(d, c) = 1, in [0, c).
Int inverse_mod(Int d, Int c) {
  Int r0 = c, r1 = ((d % c) + c) % c;
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % c) + c) % c;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

OrbitEntry make_entry(const GroupElement& g, const UpperHalfPoint& z, double rho) {
  return {g, rho, cocycle_phase(g, z)};
}

void sort_orbit(std::vector<OrbitEntry>& out) {
  std::sort(out.begin(), out.end(), [](const OrbitEntry& p, const OrbitEntry& q) {
    if (p.rho != q.rho) return p.rho < q.rho;
    return p.element < q.element;
  });
}

void check_limits(double rho_max, const OrbitOptions& opts) {
  if (!(rho_max >= 0.0) || !std::isfinite(rho_max)) throw std::invalid_argument("rho_max must be finite and >= 0");
  if (rho_max > opts.rho_cap) {
    throw OrbitLimitError("rho_max " + std::to_string(rho_max) + " exceeds the configured cap " +
                          std::to_string(opts.rho_cap));
  }
}

// Every g with ||sigma^-1 g sigma||_F^2 = 2 cosh d(z, g z) <= bound, where
// sigma = (sqrt y, x/sqrt y; 0, 1/sqrt y) maps i to z. With sigma^-1 g sigma = (A B; C D):
//   A = a - c x,  C = c y,  D = c x + d,  B = (a x + b - c x^2 - d x) / y.
std::vector<OrbitEntry> sweep(const UpperHalfPoint& z, double rho_max, const OrbitOptions& opts) {
  const double x = z.x();
  const double y = z.y();
  const double bound = 2.0 * std::cosh(rho_max) * (1.0 + 1e-12) + 1e-12;
  const auto c_max = static_cast<Int>(std::floor(std::sqrt(bound) / y));

  const int threads = opts.threads > 0 ? opts.threads : default_threads();
  std::vector<std::vector<OrbitEntry>> per_c(static_cast<std::size_t>(c_max) + 1);

  parallel_for(per_c.size(), threads, [&](std::size_t ci) {
    const auto c = static_cast<Int>(ci);
    auto& out = per_c[ci];
    if (c == 0) {
      const auto b_max = static_cast<Int>(std::floor(y * std::sqrt(std::max(bound - 2.0, 0.0))));
      for (Int b = -b_max; b <= b_max; ++b) {
        GroupElement g(1, b, 0, 1);
        const double rho = displacement(g, z);
        if (rho <= rho_max) out.push_back(make_entry(g, z, rho));
      }
      return;
    }
    const double cd = static_cast<double>(c);
    const double rest_c = bound - cd * cd * y * y;
    if (rest_c < 0.0) return;
    const double rd = std::sqrt(rest_c);
    const auto d_lo = static_cast<Int>(std::ceil(-cd * x - rd));
    const auto d_hi = static_cast<Int>(std::floor(-cd * x + rd));
    for (Int d = d_lo; d <= d_hi; ++d) {
      if (std::gcd(d, c) != 1) continue;
      const double dd = cd * x + static_cast<double>(d);
      const double rest_d = rest_c - dd * dd;
      if (rest_d < 0.0) continue;
      const double ra = std::sqrt(rest_d);
      const auto a_lo = static_cast<Int>(std::ceil(cd * x - ra));
      const auto a_hi = static_cast<Int>(std::floor(cd * x + ra));
      const Int a0 = inverse_mod(d, c);
      // first a >= a_lo with a = a0 (mod c)
      Int a = a_lo + ((a0 - a_lo) % c + c) % c;
      for (; a <= a_hi; a += c) {
        const Int num = detail::checked_mul(a, d) - 1;
        const Int b = floor_div(num, c);
        GroupElement g(a, b, c, d);
        const double rho = displacement(g, z);
        if (rho <= rho_max) out.push_back(make_entry(g, z, rho));
      }
    }
    if (out.size() > opts.max_entries) throw OrbitLimitError("orbit enumeration exceeded max_entries");
  });

  std::size_t total = 0;
  for (const auto& v : per_c) total += v.size();
  if (total > opts.max_entries) throw OrbitLimitError("orbit enumeration exceeded max_entries");
  std::vector<OrbitEntry> out;
  out.reserve(total);
  for (auto& v : per_c) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Tiles eta F meeting the closed ball B(z, rho_max) are connected through shared
// edges, and the neighbours of eta F are eta T F, eta T^-1 F and eta S F. A tile is
// expanded only while a lower bound for d(z, eta F) stays within rho_max.
std::vector<OrbitEntry> generator_bfs(const UpperHalfPoint& z, double rho_max, const OrbitOptions& opts) {
  const auto [reduced, g] = reduce_to_fundamental_domain(z);
  (void)reduced;
  const GroupElement start = g.inverse();  // z lies in start F
  const GroupElement gens[3] = {GroupElement::T(1), GroupElement::T(-1), GroupElement::S()};
  const double slack = 1e-9;

  std::unordered_set<GroupElement, GroupElementHash> visited{start};
  std::deque<GroupElement> queue{start};
  std::vector<OrbitEntry> out;
  while (!queue.empty()) {
    const GroupElement eta = queue.front();
    queue.pop_front();
    const UpperHalfPoint w = mobius_apply(eta.inverse(), z);
    if (distance_lower_bound_to_fundamental_domain(w) > rho_max + slack) continue;
    const GroupElement gamma = eta * g;
    const double rho = displacement(gamma, z);
    if (rho <= rho_max) out.push_back(make_entry(gamma, z, rho));
    for (const auto& s : gens) {
      GroupElement next = eta * s;
      if (visited.insert(next).second) queue.push_back(next);
    }
    if (visited.size() > 8 * opts.max_entries + 1024) {
      throw OrbitLimitError("generator search exceeded max_entries");
    }
  }
  if (out.size() > opts.max_entries) throw OrbitLimitError("orbit enumeration exceeded max_entries");
  return out;
}

}  // namespace

double displacement(const GroupElement& g, const UpperHalfPoint& z) {
  const std::complex<double> w = z.z();
  const std::complex<double> q = static_cast<double>(g.c()) * w * w +
                                 static_cast<double>(g.d() - g.a()) * w - static_cast<double>(g.b());
  // cosh(rho) - 1 = 2 sinh^2(rho/2) = |q|^2/(2y^2)
  return 2.0 * std::asinh(std::abs(q) / (2.0 * z.y()));
}

std::complex<double> cocycle_phase(const GroupElement& g, const UpperHalfPoint& z) {
  const std::complex<double> w = z.z();
  const std::complex<double> wb = std::conj(w);
  const auto c = static_cast<double>(g.c());
  const auto d = static_cast<double>(g.d());
  const std::complex<double> gw = mobius_apply(g, w);
  const std::complex<double> p = ((c * wb + d) / (c * w + d)) * ((w - std::conj(gw)) / (gw - wb));
  return p / std::abs(p);
}

std::vector<OrbitEntry> enumerate_orbit(const UpperHalfPoint& z, double rho_max, const OrbitOptions& opts) {
  check_limits(rho_max, opts);
  std::vector<OrbitEntry> out = opts.strategy == EnumerationStrategy::EntrySweep ? sweep(z, rho_max, opts)
                                                                                 : generator_bfs(z, rho_max, opts);
  sort_orbit(out);
  return out;
}

std::size_t counting_function(const UpperHalfPoint& z, double rho, const OrbitOptions& opts) {
  const auto orbit = enumerate_orbit(z, rho, opts);
  return static_cast<std::size_t>(
      std::count_if(orbit.begin(), orbit.end(), [rho](const OrbitEntry& e) { return e.rho < rho; }));
}

double counting_constant(const std::vector<OrbitEntry>& orbit) {
  double best = 0.0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    // N jumps to i+1 just after rho_i (ties collapse onto the last index)
    if (i + 1 < orbit.size() && orbit[i + 1].rho == orbit[i].rho) continue;
    best = std::max(best, static_cast<double>(i + 1) * std::exp(-orbit[i].rho));
  }
  return best;
}

bool is_in_gamma0(const GroupElement& g, long long level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  return g.c() % level == 0;
}

bool is_in_gamma_inf(const GroupElement& g, long long width) {
  if (width < 1) throw std::invalid_argument("cusp width must be positive");
  return g.c() == 0 && g.b() % width == 0;
}

}  // namespace supnorm
