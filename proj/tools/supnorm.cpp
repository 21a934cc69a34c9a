// supnorm: command-line front end for the supnorm library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "supnorm/basis_cache.hpp"
#include "supnorm/bounds.hpp"
#include "supnorm/config.hpp"
#include "supnorm/heat_kernel.hpp"
#include "supnorm/orbits.hpp"
#include "supnorm/scan.hpp"
#include "supnorm/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace supnorm;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Output sink: a file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      if (auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Common {
  std::string config_file;
  std::vector<std::string> overrides;
  int threads = 1;
  std::string cache_dir;
  bool no_cache = false;

  RunConfig build() const {
    RunConfig cfg;
    cfg.cache_dir = default_cache_dir();
    if (!config_file.empty()) cfg.load_file(config_file);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + kv + "'");
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    cfg.threads = threads;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (no_cache) cfg.cache_dir.clear();
    return cfg;
  }
};

void header(std::ostream& os, const RunConfig& cfg, const std::string& what) {
  os << "# supnorm " << kToolVersion << " " << what << "\n";
  os << "# config_hash=" << cfg.hash() << " seed=" << cfg.seed << "\n";
}

json provenance(const RunConfig& cfg) {
  return {{"tool_version", kToolVersion}, {"config_hash", cfg.hash()}, {"seed", cfg.seed}};
}

void require_even_weight(int weight) {
  if (weight % 2 != 0) throw UsageError("odd weight " + std::to_string(weight));
  if (weight < 2) throw UsageError("weight must be a positive even integer");
}

UpperHalfPoint parse_z(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--z expects x,y");
  try {
    return UpperHalfPoint(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--z: ") + e.what());
  }
}

std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      parts.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--rho-grid expects a:b:step");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0] || parts[0] < 0.0) {
    throw UsageError("--rho-grid expects a:b:step with 0 <= a <= b and step > 0");
  }
  const long n = std::lround((parts[1] - parts[0]) / parts[2]);
  std::vector<double> out;
  for (long i = 0; i <= n; ++i) out.push_back(parts[0] + i * parts[2]);
  return out;
}

Region parse_region(const std::string& kind, double ymax, double ymin, double width) {
  if (kind == "compact") return Region::compact(ymax > 0.0 ? ymax : 2.0);
  if (kind == "full") return Region::fundamental(ymax);
  if (kind == "strip") {
    if (!(ymax > 0.0)) throw UsageError("--region strip needs --ymax");
    return Region::strip(width, ymin > 0.0 ? ymin : 0.5, ymax);
  }
  throw UsageError("--region must be compact, full or strip");
}

OrthonormalBasis load_basis(int weight, const RunConfig& cfg) {
  require_even_weight(weight);
  if (cusp_form_dimension(weight) == 0) throw UsageError("S_" + std::to_string(weight) + " is zero");
  return basis_for(weight, cfg);
}

json scan_summary(const ScanResult& r, const RunConfig& cfg) {
  json j = provenance(cfg);
  j["weight"] = r.weight;
  j["k"] = r.weight / 2;
  j["region"] = r.region.describe();
  j["nx"] = r.grid.nx;
  j["ny"] = r.grid.ny;
  j["refine"] = r.grid.refine;
  j["points"] = r.points.size();
  j["sup_value"] = r.sup_value;
  j["argmax"] = {r.argmax.x(), r.argmax.y()};
  return j;
}

void write_scan_csv(std::ostream& os, const ScanResult& r, const RunConfig& cfg) {
  header(os, cfg, "scan weight=" + std::to_string(r.weight) + " region=" + r.region.describe());
  os << "x,y,S_k\n";
  for (const auto& p : r.points) os << num(p.x) << ',' << num(p.y) << ',' << num(p.value) << '\n';
  os << "# summary sup=" << num(r.sup_value) << " x=" << num(r.argmax.x()) << " y=" << num(r.argmax.y()) << "\n";
}

json check_json(const CheckResult& c) {
  return {{"id", c.id},           {"criterion", c.criterion}, {"title", c.title},
          {"pass", c.pass},       {"measured", c.measured},   {"threshold", c.threshold},
          {"detail", c.detail},   {"seconds", c.seconds},     {"time_limit", c.time_limit}};
}

std::string check_line(const CheckResult& c) {
  std::ostringstream os;
  os << (c.pass ? "PASS" : "FAIL") << "  ";
  if (c.criterion > 0) os << "[" << c.criterion << "] ";
  os << c.id << ": " << c.title << " | " << c.detail;
  return os.str();
}

std::vector<std::pair<double, double>> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::pair<double, double>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw UsageError(path + ": expected two columns k,sup");
    try {
      const double k = std::stod(line.substr(0, comma));
      const double s = std::stod(line.substr(comma + 1));
      out.emplace_back(k, s);
    } catch (const std::invalid_argument&) {
      if (out.empty()) continue;  // header
      throw UsageError(path + ": bad row '" + line + "'");
    }
  }
  return out;
}

json fit_json(const SlopeFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"residual", f.residual}, {"n", f.points.size()}};
}

int emit_error(int code, const std::string& type, const std::string& message) {
  json j = {{"error", {{"type", type}, {"message", message}}}, {"exit_code", code}};
  std::cerr << j.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Bergman kernels, higher-weight heat kernels and sup-norm bounds for PSL2(Z)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_file, "key = value configuration file");
    sub->add_option("--set", common.overrides, "override one config key (key=value); repeatable");
    sub->add_option("--threads", common.threads, "worker threads")->check(CLI::NonNegativeNumber);
    sub->add_option("--cache-dir", common.cache_dir, "basis cache directory");
    sub->add_flag("--no-cache", common.no_cache, "disable the basis cache");
  };

  int weight = 0;
  double t = 1.0, rho_max = 6.0, delta = 0.0, ymax = 0.0, ymin = 0.0, width = 1.0;
  std::string z_text, out, summary_path, rho_grid, region = "full", suite = "all", in_path;
  long long level = 1;
  int nx = 0, ny = 0;
  bool refine = false, with_acceptance = true;
  std::string weights_text = "12:60:4";

  auto* scan = app.add_subcommand("scan", "sample S_k on a grid and report the supremum");
  scan->add_option("--weight", weight, "even weight 2k")->required();
  scan->add_option("--region", region, "compact | full | strip")->capture_default_str();
  scan->add_option("--ymax", ymax, "top of the region (full: default k/(2 pi) + 1)");
  scan->add_option("--ymin", ymin, "strip bottom (default 0.5)");
  scan->add_option("--width", width, "strip width");
  scan->add_option("--nx", nx, "grid columns");
  scan->add_option("--ny", ny, "grid rows");
  scan->add_flag("--refine", refine, "compass search from the grid argmax (extra rows)");
  scan->add_option("--out", out, "CSV path (default stdout)");
  scan->add_option("--summary", summary_path, "JSON summary path (default <out>.json)");
  add_common(scan);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "heat | lemma | bounds | forms | all")->capture_default_str();
  verify->add_option("--out", out, "JSON report path (default stdout)");
  add_common(verify);

  auto* heat = app.add_subcommand("heat", "tabulate K_k(t; rho) against its Gaussian envelope");
  heat->add_option("--weight", weight, "even weight 2k")->required();
  heat->add_option("--t", t, "heat time")->check(CLI::PositiveNumber);
  heat->add_option("--rho-grid", rho_grid, "a:b:step")->required();
  heat->add_option("--out", out, "CSV path (default stdout)");
  add_common(heat);

  auto* orbit = app.add_subcommand("orbit", "list g with d(z, gz) <= rho_max");
  orbit->add_option("--z", z_text, "x,y")->required();
  orbit->add_option("--rho-max", rho_max, "displacement bound")->check(CLI::NonNegativeNumber);
  orbit->add_option("--level", level, "restrict to Gamma_0(N)")->check(CLI::PositiveNumber);
  orbit->add_option("--out", out, "CSV path (default stdout)");
  add_common(orbit);

  auto* bound = app.add_subcommand("bound", "compare S_k with the explicit orbit bound");
  bound->add_option("--weight", weight, "even weight 2k")->required();
  bound->add_option("--z", z_text, "single point x,y (default: grid over the capped domain)");
  bound->add_option("--delta", delta, "delta (default from config)");
  bound->add_option("--rho-max", rho_max, "explicit orbit range")->capture_default_str();
  bound->add_option("--nx", nx, "grid columns (default 20)");
  bound->add_option("--ny", ny, "grid rows (default 20)");
  bound->add_option("--out", out, "CSV path (default stdout)");
  add_common(bound);

  auto* fit = app.add_subcommand("fit", "least-squares slope of log sup against log k");
  fit->add_option("--in", in_path, "CSV of k,sup pairs")->required();
  fit->add_option("--out", out, "JSON path (default stdout)");
  add_common(fit);

  auto* reproduce = app.add_subcommand("reproduce", "growth study over weights 12..60, fits and acceptance table");
  reproduce->add_option("--out", out, "output directory")->required();
  reproduce->add_option("--weights", weights_text, "lo:hi:step weight range")->capture_default_str();
  reproduce->add_flag("--with-acceptance,!--no-acceptance", with_acceptance, "also evaluate all 13 criteria");
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return emit_error(kUsage, "usage", e.what());
  }

  try {
    const RunConfig cfg = common.build();

    if (*scan) {
      require_even_weight(weight);
      const auto basis = load_basis(weight, cfg);
      const GridSpec grid{nx > 0 ? nx : cfg.nx, ny > 0 ? ny : cfg.ny, refine || cfg.refine};
      const auto r = supnorm_scan(weight, parse_region(region, ymax, ymin, width), grid, basis, cfg.threads);
      {
        Sink sink(out);
        write_scan_csv(sink.out(), r, cfg);
      }
      const auto summary = scan_summary(r, cfg).dump(2) + "\n";
      const std::string spath = !summary_path.empty() ? summary_path : (out.empty() ? "" : out + ".json");
      if (spath.empty()) {
        std::cerr << summary;
      } else {
        Sink s(spath);
        s.out() << summary;
      }
      return kOk;
    }

    if (*verify) {
      const auto results = run_suite(suite, cfg);
      json report = provenance(cfg);
      report["suite"] = suite;
      report["checks"] = json::array();
      bool all = true;
      for (const auto& c : results) {
        report["checks"].push_back(check_json(c));
        std::cerr << check_line(c) << "\n";
        all = all && c.pass;
      }
      report["pass"] = all;
      Sink sink(out);
      sink.out() << report.dump(2) << "\n";
      return all ? kOk : kVerifyFailed;
    }

    if (*heat) {
      require_even_weight(weight);
      const HeatParams p{weight / 2, t};
      const auto grid = parse_grid(rho_grid);
      const auto q = cfg.quadrature();
      const double log_g = log_g_k_envelope(p, q).log_value;
      Sink sink(out);
      auto& os = sink.out();
      header(os, cfg, "heat weight=" + std::to_string(weight) + " t=" + num(t));
      os << "k,t,rho,K_k,envelope,ratio\n";
      for (double rho : grid) {
        const double log_k = log_heat_kernel_point(p, rho, q).log_value;
        const double log_env = log_g - rho * rho / (8.0 * t);
        os << p.k << ',' << num(t) << ',' << num(rho) << ',' << num(std::exp(log_k)) << ',' << num(std::exp(log_env))
           << ',' << num(std::exp(log_k - log_env)) << '\n';
      }
      return kOk;
    }

    if (*orbit) {
      const auto z = parse_z(z_text);
      const auto entries = enumerate_orbit(z, rho_max, cfg.orbit());
      Sink sink(out);
      auto& os = sink.out();
      header(os, cfg, "orbit z=" + z_text + " rho_max=" + num(rho_max) + " level=" + std::to_string(level));
      os << "a,b,c,d,rho,phase_re,phase_im\n";
      for (const auto& e : entries) {
        if (level > 1 && !is_in_gamma0(e.element, level)) continue;
        const auto& g = e.element;
        os << g.a() << ',' << g.b() << ',' << g.c() << ',' << g.d() << ',' << num(e.rho) << ','
           << num(e.phase.real()) << ',' << num(e.phase.imag()) << '\n';
      }
      return kOk;
    }

    if (*bound) {
      require_even_weight(weight);
      const auto basis = load_basis(weight, cfg);
      BoundConfig bc;
      bc.delta = delta > 0.0 ? delta : cfg.delta;
      bc.rho_max = rho_max;
      bc.c_delta = compute_c_delta(bc.delta);
      bc.orbit = cfg.orbit();
      bc.validate();
      std::vector<UpperHalfPoint> pts;
      if (!z_text.empty()) {
        pts.push_back(parse_z(z_text));
      } else {
        const auto r = supnorm_scan(weight, Region::fundamental(), {nx > 0 ? nx : 20, ny > 0 ? ny : 20, false}, basis,
                                    cfg.threads);
        for (const auto& p : r.points) pts.emplace_back(p.x, p.y);
      }
      Sink sink(out);
      auto& os = sink.out();
      header(os, cfg,
             "bound weight=" + std::to_string(weight) + " delta=" + num(bc.delta) + " c_delta=" + num(bc.c_delta) +
                 " rho_max=" + num(bc.rho_max));
      os << "x,y,S_k,prop41_bound,tail\n";
      for (const auto& z : pts) {
        const double s = bergman_kernel_diag_any(z, basis);
        const auto b = explicit_bound(weight, z, bc);
        os << num(z.x()) << ',' << num(z.y()) << ',' << num(s) << ',' << num(b.value) << ',' << num(b.tail_bound)
           << '\n';
      }
      return kOk;
    }

    if (*fit) {
      const auto f = growth_fit(read_pairs(in_path));
      json j = fit_json(f);
      j["input"] = in_path;
      Sink sink(out);
      sink.out() << j.dump(2) << "\n";
      return kOk;
    }

    if (*reproduce) {
      int w_lo = 0, w_hi = 0, w_step = 0;
      if (std::sscanf(weights_text.c_str(), "%d:%d:%d", &w_lo, &w_hi, &w_step) != 3 || w_lo < 12 || w_hi < w_lo ||
          w_step < 2 || w_lo % 2 || w_step % 2) {
        throw UsageError("--weights expects even lo:hi:step with lo >= 12");
      }
      fs::create_directories(out);
      const auto study = run_growth_study(cfg, w_lo, w_hi, w_step);
      {
        std::ofstream os(fs::path(out) / "growth.csv");
        header(os, cfg, "growth weights " + weights_text + " grid " + std::to_string(cfg.nx) + "x" + std::to_string(cfg.ny));
        os << "weight,k,dimension,compact_sup,compact_x,compact_y,full_sup,full_x,full_y,horocycle_mean\n";
        for (const auto& r : study.rows) {
          os << r.weight << ',' << r.weight / 2 << ',' << r.dimension << ',' << num(r.compact_sup) << ','
             << num(r.compact_argmax.x()) << ',' << num(r.compact_argmax.y()) << ',' << num(r.full_sup) << ','
             << num(r.full_argmax.x()) << ',' << num(r.full_argmax.y()) << ',' << num(r.horocycle_mean) << '\n';
        }
      }
      for (const auto& [name, pick] :
           {std::pair{"sups_compact.csv", &GrowthRow::compact_sup}, std::pair{"sups_full.csv", &GrowthRow::full_sup}}) {
        std::ofstream os(fs::path(out) / name);
        header(os, cfg, name);
        os << "k,sup\n";
        for (const auto& r : study.rows) os << r.weight / 2 << ',' << num(r.*pick) << '\n';
      }
      json fits = provenance(cfg);
      fits["weights"] = weights_text;
      fits["compact"] = fit_json(study.compact_fit);
      fits["full"] = fit_json(study.full_fit);
      {
        std::ofstream os(fs::path(out) / "fit.json");
        os << fits.dump(2) << "\n";
      }
      std::vector<CheckResult> checks;
      if (with_acceptance) {
        checks.push_back(check_eigenvalue_identity(cfg));
        checks.push_back(check_lemma_defect(cfg));
        checks.push_back(check_monotonicity(cfg));
        checks.push_back(check_envelope(cfg));
        checks.push_back(check_laplace_identity(cfg));
        checks.push_back(check_spectral_inequality(cfg));
        checks.push_back(check_average_identity(cfg));
        checks.push_back(check_orbit_bound(cfg));
        checks.push_back(check_counting_function(cfg));
      }
      checks.push_back(check_growth_exponents(study, cfg));
      checks.push_back(check_cusp_localization(study));
      if (with_acceptance) {
        checks.push_back(check_sym_square(cfg));
        checks.push_back(check_subgroup_comparison(cfg));
      }
      json table = provenance(cfg);
      table["checks"] = json::array();
      bool all = true;
      std::ofstream txt(fs::path(out) / "acceptance.txt");
      for (const auto& c : checks) {
        table["checks"].push_back(check_json(c));
        txt << check_line(c) << "\n";
        std::cout << check_line(c) << "\n";
        all = all && c.pass;
      }
      table["pass"] = all;
      std::ofstream(fs::path(out) / "acceptance.json") << table.dump(2) << "\n";
      return all ? kOk : kVerifyFailed;
    }
  } catch (const UsageError& e) {
    return emit_error(kUsage, "usage", e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error(kUsage, "invalid_argument", e.what());
  } catch (const std::domain_error& e) {
    return emit_error(kUsage, "domain_error", e.what());
  } catch (const QuadratureError& e) {
    return emit_error(kNumerical, "quadrature", e.what());
  } catch (const OrbitLimitError& e) {
    return emit_error(kNumerical, "orbit_limit", e.what());
  } catch (const GramError& e) {
    return emit_error(kNumerical, "gram", e.what());
  } catch (const std::exception& e) {
    return emit_error(kNumerical, "numerical", e.what());
  }
  return kUsage;
}
