#include "supnorm/quadrature.hpp"

namespace supnorm {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
  if (r_max_policy.kind == RMaxPolicy::Kind::Fixed && !(r_max_policy.value > 0.0)) {
    throw std::invalid_argument("fixed r_max must be positive");
  }
}

}  // namespace supnorm
