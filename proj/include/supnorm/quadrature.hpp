#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supnorm {

/// How far an integral over [lo, infinity) is carried before truncation.
struct RMaxPolicy {
  enum class Kind { Auto, Fixed };
  Kind kind = Kind::Auto;
  double value = 0.0;

  static RMaxPolicy automatic() { return {}; }
  static RMaxPolicy fixed(double r) { return {Kind::Fixed, r}; }
};

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 200;
  RMaxPolicy r_max_policy{};

  /// Throws std::invalid_argument for non-positive tolerances or subdivisions.
  void validate() const;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Real>
struct QuadratureResult {
  Real value{};
  Real error{};
  int subdivisions = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of f over the panels
/// given by consecutive breakpoints. The panel with the largest error estimate
/// is bisected until error <= max(abs_tol, rel_tol |value|). Panel order and
/// the final summation are deterministic. Throws QuadratureError when
/// max_subdivisions bisections do not reach the tolerance.
template <class Real, class F>
QuadratureResult<Real> integrate(F&& f, const std::vector<Real>& breakpoints, const QuadratureConfig& cfg) {
  using GK = boost::math::quadrature::gauss_kronrod<Real, 15>;
  struct Panel {
    Real a, b, value, error;
    std::size_t id;
  };
  struct Worse {
    bool operator()(const Panel& p, const Panel& q) const {
      if (p.error != q.error) return p.error < q.error;
      return p.id > q.id;
    }
  };
  cfg.validate();
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");

  std::size_t next_id = 0;
  auto eval = [&](Real a, Real b) {
    Real err = 0;
    const Real v = GK::integrate(f, a, b, 0, Real(0), &err);
    if (!std::isfinite(static_cast<double>(v))) throw QuadratureError("integrand produced a non-finite value");
    return Panel{a, b, v, err, next_id++};
  };

  std::priority_queue<Panel, std::vector<Panel>, Worse> heap;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) heap.push(eval(breakpoints[i], breakpoints[i + 1]));
  }

  auto totals = [&heap]() {
    auto copy = heap;
    std::vector<Panel> panels;
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    Real v = 0, e = 0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };

  // running sums for the stopping test; final sums are recomputed in panel order
  Real value = 0, error = 0;
  {
    auto [v, e] = totals();
    value = v;
    error = e;
  }
  int subdivisions = 0;
  while (error > std::max(Real(cfg.abs_tol), Real(cfg.rel_tol) * std::abs(value))) {
    if (heap.empty()) break;
    if (subdivisions >= cfg.max_subdivisions) {
      throw QuadratureError("quadrature did not converge within " + std::to_string(cfg.max_subdivisions) +
                            " subdivisions (error " + std::to_string(static_cast<double>(error)) + ")");
    }
    Panel worst = heap.top();
    heap.pop();
    const Real mid = (worst.a + worst.b) / 2;
    Panel left = eval(worst.a, mid);
    Panel right = eval(mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  auto [v, e] = totals();
  return {v, e, subdivisions};
}

template <class Real, class F>
QuadratureResult<Real> integrate(F&& f, Real a, Real b, const QuadratureConfig& cfg) {
  return integrate<Real>(std::forward<F>(f), std::vector<Real>{a, b}, cfg);
}

}  // namespace supnorm
