#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "supnorm/orbits.hpp"
#include "supnorm/quadrature.hpp"

namespace supnorm {

inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);
std::string hex64(std::uint64_t v);

/// Every knob of a CLI run. threads is excluded from the hash: outputs do not
/// depend on it.
struct RunConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 200;
  double rho_cap = 25.0;
  long long max_orbit_entries = 20'000'000;
  int nx = 200;
  int ny = 200;
  bool refine = false;
  double compact_ymax = 2.0;
  double delta = 1.0;
  double orthonormality_tol = 1e-6;
  double compact_slope_lo = 0.7;
  double compact_slope_hi = 1.3;
  double full_slope_lo = 1.3;
  double full_slope_hi = 1.7;
  std::uint64_t seed = 20240601;
  std::string cache_dir;
  int threads = 1;

  /// Sets one key from its text form. Throws std::invalid_argument for an
  /// unknown key or unparsable value.
  void set(const std::string& key, const std::string& value);

  /// "key = value" lines, '#' comments. Throws std::runtime_error when the
  /// file cannot be read and std::invalid_argument on bad lines.
  void load_file(const std::string& path);

  /// Sorted "key=value" lines of every hashed field.
  std::string canonical() const;
  std::string hash() const;

  QuadratureConfig quadrature() const;
  OrbitOptions orbit() const;
};

/// $SUPNORM_CACHE_DIR if set, else ".supnorm_cache".
std::string default_cache_dir();

}  // namespace supnorm
