#include "supnorm/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace supnorm {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
  return d;
}

long long to_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw std::invalid_argument("config: bad integer for " + key + ": '" + v + "'");
  return n;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": '" + v + "'");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "rel_tol") rel_tol = to_double(key, v);
  else if (key == "abs_tol") abs_tol = to_double(key, v);
  else if (key == "max_subdivisions") max_subdivisions = static_cast<int>(to_int(key, v));
  else if (key == "rho_cap") rho_cap = to_double(key, v);
  else if (key == "max_orbit_entries") max_orbit_entries = to_int(key, v);
  else if (key == "nx") nx = static_cast<int>(to_int(key, v));
  else if (key == "ny") ny = static_cast<int>(to_int(key, v));
  else if (key == "refine") refine = to_bool(key, v);
  else if (key == "compact_ymax") compact_ymax = to_double(key, v);
  else if (key == "delta") delta = to_double(key, v);
  else if (key == "orthonormality_tol") orthonormality_tol = to_double(key, v);
  else if (key == "compact_slope_lo") compact_slope_lo = to_double(key, v);
  else if (key == "compact_slope_hi") compact_slope_hi = to_double(key, v);
  else if (key == "full_slope_lo") full_slope_lo = to_double(key, v);
  else if (key == "full_slope_hi") full_slope_hi = to_double(key, v);
  else if (key == "seed") seed = static_cast<std::uint64_t>(to_int(key, v));
  else if (key == "cache_dir") cache_dir = v;
  else if (key == "threads") threads = static_cast<int>(to_int(key, v));
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: " + path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

std::string RunConfig::canonical() const {
  std::map<std::string, std::string> kv{
      {"rel_tol", fmt(rel_tol)},
      {"abs_tol", fmt(abs_tol)},
      {"max_subdivisions", std::to_string(max_subdivisions)},
      {"rho_cap", fmt(rho_cap)},
      {"max_orbit_entries", std::to_string(max_orbit_entries)},
      {"nx", std::to_string(nx)},
      {"ny", std::to_string(ny)},
      {"refine", refine ? "true" : "false"},
      {"compact_ymax", fmt(compact_ymax)},
      {"delta", fmt(delta)},
      {"orthonormality_tol", fmt(orthonormality_tol)},
      {"compact_slope_lo", fmt(compact_slope_lo)},
      {"compact_slope_hi", fmt(compact_slope_hi)},
      {"full_slope_lo", fmt(full_slope_lo)},
      {"full_slope_hi", fmt(full_slope_hi)},
      {"seed", std::to_string(seed)},
  };
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << '=' << v << '\n';
  return os.str();
}

std::string RunConfig::hash() const { return hex64(fnv1a(canonical())); }

QuadratureConfig RunConfig::quadrature() const {
  QuadratureConfig q;
  q.rel_tol = rel_tol;
  q.abs_tol = abs_tol;
  q.max_subdivisions = max_subdivisions;
  return q;
}

OrbitOptions RunConfig::orbit() const {
  OrbitOptions o;
  o.rho_cap = rho_cap;
  o.max_entries = static_cast<std::size_t>(max_orbit_entries);
  o.threads = threads;
  return o;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("SUPNORM_CACHE_DIR"); env && *env) return env;
  return ".supnorm_cache";
}

}  // namespace supnorm
