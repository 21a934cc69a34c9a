#pragma once

#include <optional>
#include <string>

#include "supnorm/bergman.hpp"

namespace supnorm {

inline constexpr int kBasisCacheVersion = 1;

/// Hash of everything that changes the coefficients of orthonormal_basis.
std::string basis_cache_key(int weight, const QuadratureConfig& q, const BasisOptions& opts);

/// <dir>/basis_w<weight>_<key>.json
std::string basis_cache_path(const std::string& dir, int weight, const std::string& key);

/// JSON text with format tag, version, key, weight, n_terms, precision,
/// gram_residual and coefficients as decimal strings (round-trip exact).
std::string serialize_basis(const OrthonormalBasis& b, const std::string& key);

/// Throws std::runtime_error on a malformed document.
OrthonormalBasis deserialize_basis(const std::string& text, std::string* key = nullptr);

/// Cached basis if a file with a matching version and key exists, else nullopt.
std::optional<OrthonormalBasis> load_cached_basis(const std::string& dir, int weight, const std::string& key);

/// Writes atomically (temp file + rename); creates dir as needed.
void save_cached_basis(const std::string& dir, const OrthonormalBasis& b, const std::string& key);

/// orthonormal_basis through the cache; an empty dir disables caching.
OrthonormalBasis cached_orthonormal_basis(int weight, const QuadratureConfig& q, const BasisOptions& opts,
                                          const std::string& dir);

}  // namespace supnorm
