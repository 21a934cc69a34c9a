#include "supnorm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "supnorm/basis_cache.hpp"
#include "supnorm/bounds.hpp"
#include "supnorm/heat_kernel.hpp"
#include "supnorm/orbits.hpp"

namespace supnorm {

namespace {

constexpr double kPi = std::numbers::pi;

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_;
};

CheckResult make(std::string id, int criterion, std::string title, double limit) {
  CheckResult r;
  r.id = std::move(id);
  r.criterion = criterion;
  r.title = std::move(title);
  r.time_limit = limit;
  return r;
}

// applies the runtime budget, if any
void finish(CheckResult& r, const Stopwatch& sw) {
  r.seconds = sw.seconds();
  if (r.time_limit > 0.0 && r.seconds > r.time_limit) {
    r.pass = false;
    r.detail += "; runtime " + std::to_string(r.seconds) + " s over budget";
  }
}

std::string g(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool near_elliptic(const UpperHalfPoint& z) {
  const UpperHalfPoint pts[] = {{0.0, 1.0}, {0.5, std::sqrt(3.0) / 2.0}, {-0.5, std::sqrt(3.0) / 2.0}};
  for (const auto& e : pts) {
    if (hyperbolic_distance(z, e) < 0.1) return true;
  }
  return false;
}

std::vector<double> rho_grid() {
  std::vector<double> out;
  for (int i = 0; i <= 160; ++i) out.push_back(0.05 * i);
  return out;
}

}  // namespace

OrthonormalBasis basis_for(int weight, const RunConfig& cfg) {
  BasisOptions opts;
  opts.orthonormality_tol = cfg.orthonormality_tol;
  opts.threads = cfg.threads;
  return cached_orthonormal_basis(weight, cfg.quadrature(), opts, cfg.cache_dir);
}

CheckResult check_eigenvalue_identity(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("eigenvalue", 1, "finite-difference Delta_6 (Delta y^6) = -30 Delta y^6", 10.0);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.9, 2.0);
  const auto field = maass_field(delta_form(60));
  const int k = 6;
  const double lambda = k * (1.0 - k);
  double worst_rel = 0.0, worst_ratio_dev = 0.0;
  int points = 0;
  while (points < 10) {
    const UpperHalfPoint z(ux(rng), uy(rng));
    if (near_elliptic(z)) continue;
    ++points;
    const auto phi = field(z);
    auto residual = [&](double h) { return std::abs(apply_laplacian_fd(field, k, z, h) - lambda * phi) / std::abs(lambda * phi); };
    worst_rel = std::max(worst_rel, residual(1e-3));
    const double ratio = residual(1e-2) / residual(5e-3);
    worst_ratio_dev = std::max(worst_ratio_dev, std::abs(ratio / 4.0 - 1.0));
  }
  r.measured = worst_rel;
  r.threshold = 1e-3;
  r.pass = worst_rel < 1e-3 && worst_ratio_dev <= 0.2;
  r.detail = "max rel err at h=1e-3: " + g(worst_rel) + "; max |ratio/4 - 1| under halving: " + g(worst_ratio_dev);
  finish(r, sw);
  return r;
}

CheckResult check_lemma_defect(const RunConfig& cfg, int samples) {
  Stopwatch sw;
  auto r = make("lemma", 2, "defect sinh(r) dF/drho + sinh(rho) dF/dr < 0 on seeded samples", 30.0);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> uk(1, 20);
  int failures = 0;
  double worst = -INFINITY;
  for (int i = 0; i < samples; ++i) {
    const double t = 10.0 * (1.0 - u01(rng));
    const double rho = 8.0 * (1.0 - u01(rng));
    const double rr = rho + 8.0 * u01(rng);
    const int k = uk(rng);
    const double d = f_k_defect_normalized({k, t}, rho, rr);
    if (!(d < 0.0)) ++failures;
    worst = std::max(worst, d);
  }
  r.measured = failures;
  r.threshold = 0;
  r.pass = failures == 0;
  r.detail = std::to_string(samples) + " samples, " + std::to_string(failures) +
             " failures, largest normalized defect " + g(worst);
  finish(r, sw);
  return r;
}

CheckResult check_monotonicity(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("monotone", 3, "K_k(t; rho) strictly decreasing on a 0.05 rho grid", 60.0);
  const auto q = cfg.quadrature();
  const auto grid = rho_grid();
  double worst_margin = INFINITY;
  std::string where;
  bool ok = true;
  for (int k : {1, 3, 10}) {
    for (double t : {0.1, 1.0, 10.0}) {
      std::vector<LogQuantity> v(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) v[i] = log_heat_kernel_point({k, t}, grid[i], q);
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        // relative drop against ten times the combined tolerance
        const double drop = -std::expm1(v[i + 1].log_value - v[i].log_value);
        const double tol = 10.0 * (std::max(v[i].rel_error, q.rel_tol) + std::max(v[i + 1].rel_error, q.rel_tol));
        const double margin = drop / tol;
        if (margin < worst_margin) {
          worst_margin = margin;
          where = "k=" + std::to_string(k) + " t=" + g(t) + " rho=" + g(grid[i]);
        }
        if (!(drop > tol)) ok = false;
      }
    }
  }
  r.measured = worst_margin;
  r.threshold = 1.0;
  r.pass = ok;
  r.detail = "smallest drop / (10 x tolerance) = " + g(worst_margin) + " at " + where;
  finish(r, sw);
  return r;
}

CheckResult check_envelope(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("envelope", 4, "K_k(t; rho) <= exp(-rho^2/8t) G_k(t)", 0.0);
  const auto q = cfg.quadrature();
  const auto grid = rho_grid();
  double worst = INFINITY;
  std::string where;
  for (int k : {1, 3, 10}) {
    for (double t : {0.1, 1.0, 10.0}) {
      const double log_g = log_g_k_envelope({k, t}, q).log_value;
      for (double rho : grid) {
        const double gap = log_g - rho * rho / (8.0 * t) - log_heat_kernel_point({k, t}, rho, q).log_value;
        if (gap < worst) {
          worst = gap;
          where = "k=" + std::to_string(k) + " t=" + g(t) + " rho=" + g(rho);
        }
      }
    }
  }
  r.measured = worst;
  r.threshold = 0.0;
  r.pass = worst >= 0.0;
  r.detail = "min log(envelope / K) = " + g(worst) + " at " + where;
  finish(r, sw);
  return r;
}

CheckResult check_laplace_identity(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("laplace", 5, "int e^{-a^2 t - b^2/4t} t^{-1/2} dt = sqrt(pi)/a e^{-ab}", 5.0);
  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (double b : {0.1, 0.5, 1.0, 3.0, 6.0}) {
      const auto p = laplace_identity(a, b, cfg.quadrature());
      worst = std::max(worst, std::abs(p.numeric - p.closed_form) / p.closed_form);
    }
  }
  r.measured = worst;
  r.threshold = 1e-8;
  r.pass = worst < 1e-8;
  r.detail = "max rel difference over 5x5 (a, b): " + g(worst);
  finish(r, sw);
  return r;
}

CheckResult check_spectral_inequality(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("spectral", 6, "e^{k(k-1)t} S_k(z) <= Re K^Gamma (truncated) + tail", 120.0);
  const UpperHalfPoint pts[] = {{0.1, 1.0}, {0.3, 1.4}, {0.0, 2.0}};
  AutomorphicKernelOptions opts;
  opts.orbit = cfg.orbit();
  const double rho_max = 10.0;
  bool ok = true;
  double worst_rel_no_tail = INFINITY, worst_tail = 0.0;
  for (const auto& z : pts) {
    const auto orbit = enumerate_orbit(z, rho_max, opts.orbit);
    for (int w : {12, 24}) {
      const auto basis = basis_for(w, cfg);
      const auto s = bergman_kernel_diag_certified(w, z, basis);
      const int k = w / 2;
      for (double t : {0.5, 1.0}) {
        const auto K = automorphic_heat_kernel_diag({k, t}, orbit, rho_max, cfg.quadrature(), opts);
        // S rounded up by its certificate
        const double lhs = std::exp(k * (k - 1.0) * t) * (s.value + s.tail_bound);
        if (!(lhs <= K.value.real() + K.tail_bound)) ok = false;
        worst_rel_no_tail = std::min(worst_rel_no_tail, (K.value.real() - lhs) / lhs);
        worst_tail = std::max(worst_tail, K.tail_bound / lhs);
      }
    }
  }
  r.measured = worst_rel_no_tail;
  r.threshold = 0.0;
  r.pass = ok;
  r.detail = "min (Re K - e^{k(k-1)t} S)/(e^{k(k-1)t} S) without tail: " + g(worst_rel_no_tail) +
             "; max tail / lhs: " + g(worst_tail) + "; rho_max = 10";
  finish(r, sw);
  return r;
}

CheckResult check_average_identity(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("average", 7, "int_F S_k dmu = dim S_2k for weights 12..40", 300.0);
  double worst = 0.0;
  std::string where;
  for (int w = 12; w <= 40; w += 2) {
    const int d = cusp_form_dimension(w);
    if (d == 0) continue;
    const auto basis = basis_for(w, cfg);
    const auto avg = bergman_average(basis);
    const double dev = std::abs(static_cast<double>(avg.value) / d - 1.0);
    if (dev > worst) {
      worst = dev;
      where = "weight " + std::to_string(w);
    }
  }
  r.measured = worst;
  r.threshold = 5e-3;
  r.pass = worst < 5e-3;
  r.detail = "max relative deviation " + g(worst) + (where.empty() ? "" : " (" + where + ")");
  finish(r, sw);
  return r;
}

CheckResult check_orbit_bound(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("orbit-bound", 8, "explicit bound >= S_k on a 20x20 grid, delta = 1", 300.0);
  BoundConfig bc;
  bc.delta = cfg.delta;
  bc.c_delta = compute_c_delta(cfg.delta);
  bc.orbit = cfg.orbit();
  int violations = 0;
  double worst_ratio = INFINITY;
  std::string where;
  for (int w : {12, 24, 40}) {
    const auto basis = basis_for(w, cfg);
    const auto scan = supnorm_scan(w, Region::fundamental(), {20, 20, false}, basis, cfg.threads);
    for (const auto& p : scan.points) {
      const UpperHalfPoint z(p.x, p.y);
      const auto s = bergman_kernel_diag_certified(w, z, basis);
      const auto b = explicit_bound(w, z, bc);
      const double lower_bound_value = b.value - b.tail_bound;
      const double ratio = lower_bound_value / (s.value + s.tail_bound);
      if (!(ratio >= 1.0)) ++violations;
      if (ratio < worst_ratio) {
        worst_ratio = ratio;
        where = "weight " + std::to_string(w) + " z=" + g(p.x) + "+" + g(p.y) + "i";
      }
    }
  }
  r.measured = worst_ratio;
  r.threshold = 1.0;
  r.pass = violations == 0;
  r.detail = std::to_string(violations) + " violations; min (bound - tail)/S = " + g(worst_ratio) + " at " + where +
             "; C_delta = " + g(bc.c_delta);
  finish(r, sw);
  return r;
}

CheckResult check_counting_function(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("counting", 9, "N(rho; z) e^{-rho} saturates; BFS and sweep agree for rho <= 6", 120.0);
  const UpperHalfPoint pts[] = {{0.0, 2.0}, {0.3, 1.4}, {0.0, 1.0}};
  double worst_spread = 0.0;
  bool finite = true, same = true;
  std::ostringstream os;
  for (const auto& z : pts) {
    auto opts = cfg.orbit();
    const auto orbit = enumerate_orbit(z, 12.0, opts);
    std::vector<double> normalized;
    for (int rho = 2; rho <= 12; rho += 2) {
      const auto n = static_cast<double>(
          std::lower_bound(orbit.begin(), orbit.end(), static_cast<double>(rho),
                           [](const OrbitEntry& e, double v) { return e.rho < v; }) -
          orbit.begin());
      normalized.push_back(n * std::exp(-rho));
    }
    for (double v : normalized) finite = finite && std::isfinite(v) && v > 0.0;
    const auto tail = std::vector<double>(normalized.end() - 3, normalized.end());
    const double spread = *std::max_element(tail.begin(), tail.end()) / *std::min_element(tail.begin(), tail.end());
    worst_spread = std::max(worst_spread, spread);
    os << "z=" << g(z.x()) << "+" << g(z.y()) << "i max N e^-rho " << g(*std::max_element(normalized.begin(), normalized.end()))
       << " spread[8,12] " << g(spread) << "; ";

    auto bfs = opts;
    bfs.strategy = EnumerationStrategy::GeneratorBfs;
    auto sweep = opts;
    sweep.strategy = EnumerationStrategy::EntrySweep;
    std::set<GroupElement> a, b;
    for (const auto& e : enumerate_orbit(z, 6.0, bfs)) a.insert(e.element);
    for (const auto& e : enumerate_orbit(z, 6.0, sweep)) b.insert(e.element);
    same = same && a == b;
  }
  r.measured = worst_spread;
  r.threshold = 3.0;
  r.pass = finite && worst_spread < 3.0 && same;
  r.detail = os.str() + (same ? "BFS == sweep" : "BFS != sweep");
  finish(r, sw);
  return r;
}

GrowthStudy run_growth_study(const RunConfig& cfg, int w_lo, int w_hi, int w_step) {
  Stopwatch sw;
  GrowthStudy study;
  std::vector<std::pair<double, double>> compact, full;
  for (int w = w_lo; w <= w_hi; w += w_step) {
    if (cusp_form_dimension(w) == 0) continue;
    const auto basis = basis_for(w, cfg);
    const GridSpec grid{cfg.nx, cfg.ny, true};
    const auto c = supnorm_scan(w, Region::compact(cfg.compact_ymax), grid, basis, cfg.threads);
    const auto f = supnorm_scan(w, Region::fundamental(), grid, basis, cfg.threads);
    GrowthRow row;
    row.weight = w;
    row.dimension = basis.dimension();
    row.compact_sup = c.sup_value;
    row.compact_argmax = c.argmax;
    row.full_sup = f.sup_value;
    row.full_argmax = f.argmax;
    const double y_star = cusp_strip_maximizer(w);
    for (const auto& form : basis.forms) row.horocycle_mean += fourier_square_integral(form, y_star).value;
    study.rows.push_back(row);
    compact.emplace_back(w / 2.0, c.sup_value);
    full.emplace_back(w / 2.0, f.sup_value);
  }
  study.compact_fit = growth_fit(compact);
  study.full_fit = growth_fit(full);
  study.seconds = sw.seconds();
  return study;
}

CheckResult check_growth_exponents(const GrowthStudy& study, const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("growth", 10, "sup-norm growth slopes: compact in window A, full domain in window B", 1800.0);
  const double a = study.compact_fit.slope, b = study.full_fit.slope;
  const bool ok_a = a >= cfg.compact_slope_lo && a <= cfg.compact_slope_hi;
  const bool ok_b = b >= cfg.full_slope_lo && b <= cfg.full_slope_hi;
  r.measured = b;
  r.threshold = cfg.full_slope_lo;
  r.pass = ok_a && ok_b;
  r.detail = "(a) compact y<=" + g(cfg.compact_ymax) + " slope " + g(a) + (ok_a ? " in " : " NOT in ") + "[" +
             g(cfg.compact_slope_lo) + "," + g(cfg.compact_slope_hi) + "]; (b) full slope " + g(b) +
             (ok_b ? " in " : " NOT in ") + "[" + g(cfg.full_slope_lo) + "," + g(cfg.full_slope_hi) + "]";
  finish(r, sw);
  r.seconds += study.seconds;
  if (r.seconds > r.time_limit) r.pass = false;
  return r;
}

CheckResult check_cusp_localization(const GrowthStudy& study) {
  Stopwatch sw;
  auto r = make("cusp", 11, "argmax y within 0.5 of k/(2 pi) for weights >= 24; horocycle mean <= sup", 0.0);
  int misplaced = 0, chain_fail = 0;
  double worst = 0.0;
  std::ostringstream os;
  for (const auto& row : study.rows) {
    if (row.horocycle_mean > row.full_sup * (1.0 + 1e-9)) ++chain_fail;
    if (row.weight < 24) continue;
    const double dev = std::abs(row.full_argmax.y() - cusp_strip_maximizer(row.weight));
    worst = std::max(worst, dev);
    if (dev > 0.5) {
      ++misplaced;
      os << "w" << row.weight << " argmax " << g(row.full_argmax.x()) << "+" << g(row.full_argmax.y()) << "i; ";
    }
  }
  r.measured = worst;
  r.threshold = 0.5;
  r.pass = misplaced == 0 && chain_fail == 0;
  r.detail = std::to_string(misplaced) + " weights with argmax off the cusp peak (" + os.str() + "), " +
             std::to_string(chain_fail) + " horocycle-chain failures";
  finish(r, sw);
  return r;
}

CheckResult check_sym_square(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("symsq", 12, "L(Sym^2 f, 1) from <f,f>: band < 3x, stable to 0.1%", 300.0);
  auto fine = cfg.quadrature();
  fine.rel_tol /= 1000.0;
  fine.abs_tol /= 1000.0;
  fine.max_subdivisions *= 2;
  double lo = INFINITY, hi = 0.0, worst_change = 0.0;
  std::ostringstream os;
  for (int w : {12, 16, 18, 20, 22, 26}) {
    const double L = sym_square_L_from_norm(w, cfg.quadrature());
    const double Lf = sym_square_L_from_norm(w, fine);
    lo = std::min(lo, L);
    hi = std::max(hi, L);
    worst_change = std::max(worst_change, std::abs(Lf / L - 1.0));
    os << w << ":" << g(L) << " ";
  }
  r.measured = hi / lo;
  r.threshold = 3.0;
  r.pass = hi / lo < 3.0 && worst_change < 1e-3 && lo > 0.0;
  r.detail = "values " + os.str() + "; max/min " + g(hi / lo) + "; refinement change " + g(worst_change);
  finish(r, sw);
  return r;
}

CheckResult check_subgroup_comparison(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("subgroup", 13, "Gamma_0(N) orbit sum <= full sum, equality iff N = 1, nested", 60.0);
  const UpperHalfPoint z(0.3, 1.4);
  const HeatParams p{2, 1.0};
  const double rho_max = 10.0;
  const auto orbit = enumerate_orbit(z, rho_max, cfg.orbit());
  const LogKernelTable table(p, std::max(rho_max, orbit.back().rho), cfg.quadrature());
  std::map<int, SubgroupComparison> by_n;
  bool ok = true;
  std::ostringstream os;
  for (int N : {1, 2, 3, 4, 6}) {
    const auto c = subgroup_orbit_comparison(orbit, table, N);
    by_n[N] = c;
    const bool rel_ok = N == 1 ? c.sub_sum == c.full_sum : c.sub_sum < c.full_sum;
    ok = ok && rel_ok;
    os << "N=" << N << " sub/full " << g(c.sub_sum / c.full_sum) << "; ";
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 6}, {3, 6}, {1, 6}}) {
    ok = ok && by_n[m].sub_sum <= by_n[n].sub_sum;
  }
  r.measured = by_n[2].sub_sum / by_n[2].full_sum;
  r.threshold = 1.0;
  r.pass = ok;
  r.detail = os.str() + "nesting over N | M pairs " + (ok ? "holds" : "checked");
  finish(r, sw);
  return r;
}

CheckResult check_h_function(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("h-function", 0, "h strictly decreasing and <= 2 sqrt 2", 0.0);
  const auto q = cfg.quadrature();
  const double base = base_integral(q).value;
  double prev = base;
  bool ok = base <= 2.0 * std::numbers::sqrt2;
  for (int i = 1; i <= 50; ++i) {
    const double h = h_function(0.1 * i, q);
    ok = ok && h < prev && h <= 2.0 * std::numbers::sqrt2;
    prev = h;
  }
  r.measured = base;
  r.threshold = 2.0 * std::numbers::sqrt2;
  r.pass = ok;
  r.detail = "h(0) = " + g(base) + ", h(5) = " + g(prev);
  finish(r, sw);
  return r;
}

CheckResult check_horocycle_integral_test(const RunConfig&) {
  Stopwatch sw;
  auto r = make("horocycle", 0, "horocycle series <= Gamma-ratio integral", 0.0);
  bool ok = true;
  double worst = 0.0;
  for (int k : {1, 5, 20, 60}) {
    for (double y : {0.5, 5.0, k / (2.0 * kPi)}) {
      const auto h = horocycle_sum_vs_gamma_ratio_k(k, y);
      const double ratio = h.sum_value / h.integral_bound;
      worst = std::max(worst, ratio);
      ok = ok && h.sum_value <= h.integral_bound;
    }
  }
  r.measured = worst;
  r.threshold = 1.0;
  r.pass = ok;
  r.detail = "max sum / bound " + g(worst);
  finish(r, sw);
  return r;
}

CheckResult check_c_delta(const RunConfig&) {
  Stopwatch sw;
  auto r = make("c-delta", 0, "C_delta by Brent vs dense grid; monotone in delta", 0.0);
  const double c1 = compute_c_delta(1.0), c2 = compute_c_delta(2.0);
  double dense = 0.0;
  for (double rho = 1.0; rho <= 51.0; rho += 1e-4) dense = std::max(dense, c_delta_ratio(rho));
  dense = std::max(dense, c_delta_ratio_limit());
  const double rel = std::abs(c1 / dense - 1.0);
  r.measured = rel;
  r.threshold = 1e-6;
  r.pass = rel < 1e-6 && c2 <= c1 && compute_c_delta(0.01) > compute_c_delta(0.1);
  r.detail = "C_1 = " + g(c1) + ", C_2 = " + g(c2) + ", dense-grid rel diff " + g(rel);
  finish(r, sw);
  return r;
}

CheckResult check_bergman_invariance(const RunConfig& cfg) {
  Stopwatch sw;
  auto r = make("invariance", 0, "S_k invariant under T and S at 20 random points", 0.0);
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.9, 2.5);
  double worst = 0.0;
  for (int w : {12, 24}) {
    const auto basis = basis_for(w, cfg);
    for (int i = 0; i < 20; ++i) {
      const UpperHalfPoint z(ux(rng), uy(rng));
      const double s = bergman_kernel_diag(w, z, basis);
      const double st = bergman_kernel_diag(w, UpperHalfPoint(z.x() + 1.0, z.y()), basis);
      const double ss = bergman_kernel_diag_any(mobius_apply(GroupElement::S(), z), basis);
      worst = std::max({worst, std::abs(st / s - 1.0), std::abs(ss / s - 1.0)});
    }
  }
  r.measured = worst;
  r.threshold = 1e-6;
  r.pass = worst < 1e-6;
  r.detail = "max relative change " + g(worst);
  finish(r, sw);
  return r;
}

std::vector<CheckResult> run_acceptance(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  out.push_back(check_eigenvalue_identity(cfg));
  out.push_back(check_lemma_defect(cfg));
  out.push_back(check_monotonicity(cfg));
  out.push_back(check_envelope(cfg));
  out.push_back(check_laplace_identity(cfg));
  out.push_back(check_spectral_inequality(cfg));
  out.push_back(check_average_identity(cfg));
  out.push_back(check_orbit_bound(cfg));
  out.push_back(check_counting_function(cfg));
  const auto study = run_growth_study(cfg);
  out.push_back(check_growth_exponents(study, cfg));
  out.push_back(check_cusp_localization(study));
  out.push_back(check_sym_square(cfg));
  out.push_back(check_subgroup_comparison(cfg));
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "heat" && suite != "lemma" && suite != "bounds" && suite != "forms") {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  if (all || suite == "heat") {
    out.push_back(check_monotonicity(cfg));
    out.push_back(check_envelope(cfg));
    out.push_back(check_laplace_identity(cfg));
    out.push_back(check_spectral_inequality(cfg));
  }
  if (all || suite == "lemma") out.push_back(check_lemma_defect(cfg));
  if (all || suite == "bounds") {
    out.push_back(check_orbit_bound(cfg));
    out.push_back(check_counting_function(cfg));
    const auto study = run_growth_study(cfg);
    out.push_back(check_growth_exponents(study, cfg));
    out.push_back(check_cusp_localization(study));
    out.push_back(check_subgroup_comparison(cfg));
    out.push_back(check_h_function(cfg));
    out.push_back(check_horocycle_integral_test(cfg));
    out.push_back(check_c_delta(cfg));
  }
  if (all || suite == "forms") {
    out.push_back(check_eigenvalue_identity(cfg));
    out.push_back(check_average_identity(cfg));
    out.push_back(check_sym_square(cfg));
    out.push_back(check_bergman_invariance(cfg));
  }
  return out;
}

}  // namespace supnorm
