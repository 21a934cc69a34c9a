// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--report] [--cache-dir DIR] [--config FILE] [--json PATH]
//
// Exit status is 0 iff every criterion passes. With --report the exit status
// is 0 once all thirteen criteria were evaluated, whatever their outcome; the
// printed lines and the JSON file still carry the real verdicts.

#include <json.hpp>

#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "supnorm/verify.hpp"

int main(int argc, char** argv) {
  using namespace supnorm;
  bool report = false;
  std::string json_path;
  RunConfig cfg;
  cfg.cache_dir = default_cache_dir();
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << a << " needs a value\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--report") report = true;
    else if (a == "--cache-dir") cfg.cache_dir = next();
    else if (a == "--config") cfg.load_file(next());
    else if (a == "--json") json_path = next();
    else {
      std::cerr << "unknown argument " << a << "\n";
      return 2;
    }
  }

  std::cout << "supnorm acceptance, config " << cfg.hash() << ", seed " << cfg.seed << std::endl;
  std::vector<CheckResult> results;
  try {
    results = run_acceptance(cfg);
  } catch (const std::exception& e) {
    std::cout << "ERROR  acceptance run aborted: " << e.what() << std::endl;
    return 3;
  }

  nlohmann::json j;
  j["config_hash"] = cfg.hash();
  j["seed"] = cfg.seed;
  j["checks"] = nlohmann::json::array();
  int passed = 0;
  for (const auto& r : results) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1fs", r.seconds);
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.criterion << ". " << r.title << " | measured " << r.measured
              << " (threshold " << r.threshold << ") | " << r.detail << " | " << timing;
    if (r.time_limit > 0.0) std::cout << " of " << r.time_limit << "s";
    std::cout << std::endl;
    passed += r.pass;
    j["checks"].push_back({{"criterion", r.criterion},
                           {"id", r.id},
                           {"pass", r.pass},
                           {"measured", r.measured},
                           {"threshold", r.threshold},
                           {"detail", r.detail},
                           {"seconds", r.seconds},
                           {"time_limit", r.time_limit},
                           {"title", r.title}});
  }
  std::cout << passed << "/" << results.size() << " criteria pass" << std::endl;
  j["pass"] = passed == static_cast<int>(results.size());
  if (!json_path.empty()) std::ofstream(json_path) << j.dump(2) << "\n";
  if (results.size() != 13) return 3;
  if (report) return 0;
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
