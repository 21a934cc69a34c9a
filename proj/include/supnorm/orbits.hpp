#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "supnorm/geometry.hpp"
#include "supnorm/group.hpp"

namespace supnorm {

/// A group element together with its displacement rho = d(z, g z) and the
/// weight-one cocycle phase ((c conj(z) + d)/(c z + d)) ((z - g conj(z))/(g z - conj(z))).
struct OrbitEntry {
  GroupElement element;
  double rho = 0.0;
  std::complex<double> phase{1.0, 0.0};
};

enum class EnumerationStrategy {
  /// Flood fill over fundamental-domain tiles, stepping by the generators S, T, T^-1.
  GeneratorBfs,
  /// Direct sweep over integer matrices inside the Frobenius-norm ball.
  EntrySweep,
};

struct OrbitOptions {
  EnumerationStrategy strategy = EnumerationStrategy::EntrySweep;
  double rho_cap = 25.0;
  std::size_t max_entries = 20'000'000;
  int threads = 0;  // 0: default_threads()
};

class OrbitLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All g in PSL2(Z) with d(z, g z) <= rho_max, each once, sorted by (rho, element).
/// Throws OrbitLimitError when rho_max exceeds the cap or the count guard trips.
std::vector<OrbitEntry> enumerate_orbit(const UpperHalfPoint& z, double rho_max, const OrbitOptions& opts = {});

/// N(rho; z) = #{g : d(z, g z) < rho}.
std::size_t counting_function(const UpperHalfPoint& z, double rho, const OrbitOptions& opts = {});

/// sup over 0 < r <= rho_max of N(r; z) e^{-r}, read off a sorted orbit list.
double counting_constant(const std::vector<OrbitEntry>& orbit);

/// d(z, g z), via cosh(rho) - 1 = |c z^2 + (d - a) z - b|^2 / (2 y^2).
double displacement(const GroupElement& g, const UpperHalfPoint& z);

std::complex<double> cocycle_phase(const GroupElement& g, const UpperHalfPoint& z);

/// g in Gamma_0(N): c = 0 mod N.
bool is_in_gamma0(const GroupElement& g, long long level);

/// g a translation by a multiple of the cusp width: c = 0 and b = 0 mod width.
bool is_in_gamma_inf(const GroupElement& g, long long width);

}  // namespace supnorm
