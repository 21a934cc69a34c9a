#include "supnorm/basis_cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "supnorm/config.hpp"

namespace supnorm {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string ld_to_string(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  return buf;
}

long double ld_from_string(const std::string& s) {
  std::size_t used = 0;
  const long double v = std::stold(s, &used);
  if (used != s.size()) throw std::runtime_error("basis cache: bad coefficient '" + s + "'");
  return v;
}

}  // namespace

std::string basis_cache_key(int weight, const QuadratureConfig& q, const BasisOptions& opts) {
  std::ostringstream os;
  os.precision(17);
  os << "v" << kBasisCacheVersion << ";w=" << weight << ";n=" << (opts.n_terms > 0 ? opts.n_terms : default_n_terms(weight))
     << ";order=" << static_cast<int>(opts.order) << ";rel=" << q.rel_tol << ";abs=" << q.abs_tol
     << ";sub=" << q.max_subdivisions << ";tol=" << opts.orthonormality_tol << ";recheck=" << opts.recheck;
  return hex64(fnv1a(os.str()));
}

std::string basis_cache_path(const std::string& dir, int weight, const std::string& key) {
  return (fs::path(dir) / ("basis_w" + std::to_string(weight) + "_" + key + ".json")).string();
}

std::string serialize_basis(const OrthonormalBasis& b, const std::string& key) {
  json j;
  j["format"] = "supnorm-basis";
  j["version"] = kBasisCacheVersion;
  j["key"] = key;
  j["weight"] = b.weight;
  j["n_terms"] = b.n_terms;
  j["precision"] = "long double";
  j["gram_residual"] = b.gram_residual;
  json forms = json::array();
  for (const auto& f : b.forms) {
    json c = json::array();
    for (long double a : f.coeffs) c.push_back(ld_to_string(a));
    forms.push_back(c);
  }
  j["forms"] = forms;
  return j.dump(1) + "\n";
}

OrthonormalBasis deserialize_basis(const std::string& text, std::string* key) {
  try {
    const json j = json::parse(text);
    if (j.at("format") != "supnorm-basis") throw std::runtime_error("basis cache: wrong format tag");
    if (j.at("version").get<int>() != kBasisCacheVersion) throw std::runtime_error("basis cache: version mismatch");
    OrthonormalBasis b;
    b.weight = j.at("weight").get<int>();
    b.n_terms = j.at("n_terms").get<int>();
    b.gram_residual = j.at("gram_residual").get<double>();
    for (const auto& c : j.at("forms")) {
      QExpansion f;
      f.weight = b.weight;
      for (const auto& s : c) f.coeffs.push_back(ld_from_string(s.get<std::string>()));
      if (f.n_terms() != b.n_terms) throw std::runtime_error("basis cache: coefficient count mismatch");
      refresh_coefficient_bound(f);
      b.forms.push_back(std::move(f));
    }
    if (key) *key = j.at("key").get<std::string>();
    return b;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("basis cache: ") + e.what());
  }
}

std::optional<OrthonormalBasis> load_cached_basis(const std::string& dir, int weight, const std::string& key) {
  const auto path = basis_cache_path(dir, weight, key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    std::string stored;
    auto b = deserialize_basis(ss.str(), &stored);
    if (stored != key || b.weight != weight) return std::nullopt;
    return b;
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

void save_cached_basis(const std::string& dir, const OrthonormalBasis& b, const std::string& key) {
  fs::create_directories(dir);
  const auto path = basis_cache_path(dir, b.weight, key);
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("basis cache: cannot write " + tmp);
    out << serialize_basis(b, key);
  }
  fs::rename(tmp, path);
}

OrthonormalBasis cached_orthonormal_basis(int weight, const QuadratureConfig& q, const BasisOptions& opts,
                                          const std::string& dir) {
  if (dir.empty()) return orthonormal_basis(weight, q, opts);
  const auto key = basis_cache_key(weight, q, opts);
  if (auto b = load_cached_basis(dir, weight, key)) return *b;
  auto b = orthonormal_basis(weight, q, opts);
  save_cached_basis(dir, b, key);
  return b;
}

}  // namespace supnorm
