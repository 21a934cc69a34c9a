#pragma once

#include <cmath>
#include <numbers>
#include <utility>

namespace supnorm::num {

/// log cosh x without overflow.
template <class Real>
Real log_cosh(Real x) {
  using std::abs, std::exp, std::log1p, std::log;
  const Real a = abs(x);
  return a + log1p(exp(-2 * a)) - std::numbers::ln2_v<Real>;
}

/// log sinh x for x > 0 without overflow.
template <class Real>
Real log_sinh(Real x) {
  using std::exp, std::log, std::log1p, std::sinh;
  if (x < Real(1)) return log(sinh(x));
  return x + log1p(-exp(-2 * x)) - std::numbers::ln2_v<Real>;
}

/// log(x / sinh x), continuous at 0.
template <class Real>
Real log_x_over_sinh(Real x) {
  using std::abs, std::log;
  const Real a = abs(x);
  if (a < Real(1e-4)) return -a * a / 6;
  return log(a) - log_sinh(a);
}

/// arccosh(1 + delta) for delta >= 0, accurate for small delta.
template <class Real>
Real acosh1p(Real delta) {
  using std::log, std::log1p, std::sqrt;
  if (delta > Real(1e100)) return log(2 * (1 + delta));
  return log1p(delta + sqrt(delta * (2 + delta)));
}

/// log(exp(a) + exp(b)).
template <class Real>
Real log_add_exp(Real a, Real b) {
  using std::exp, std::log1p;
  if (a < b) std::swap(a, b);
  if (b == -INFINITY) return a;
  return a + log1p(exp(b - a));
}

}  // namespace supnorm::num
