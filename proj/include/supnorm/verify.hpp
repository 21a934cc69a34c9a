#pragma once

#include <string>
#include <vector>

#include "supnorm/config.hpp"
#include "supnorm/scan.hpp"

namespace supnorm {

struct CheckResult {
  std::string id;
  /// Acceptance criterion number, 0 for supplementary checks.
  int criterion = 0;
  std::string title;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
  /// 0 when no runtime budget applies.
  double time_limit = 0.0;
};

struct GrowthRow {
  int weight = 0;
  int dimension = 0;
  double compact_sup = 0.0;
  UpperHalfPoint compact_argmax{0.0, 1.0};
  double full_sup = 0.0;
  UpperHalfPoint full_argmax{0.0, 1.0};
  /// int_0^1 S(x + iy) dx at y = k/(2 pi), coefficient side.
  double horocycle_mean = 0.0;
};

struct GrowthStudy {
  std::vector<GrowthRow> rows;
  SlopeFit compact_fit;
  SlopeFit full_fit;
  double seconds = 0.0;
};

OrthonormalBasis basis_for(int weight, const RunConfig& cfg);

CheckResult check_eigenvalue_identity(const RunConfig& cfg);
CheckResult check_lemma_defect(const RunConfig& cfg, int samples = 10000);
CheckResult check_monotonicity(const RunConfig& cfg);
CheckResult check_envelope(const RunConfig& cfg);
CheckResult check_laplace_identity(const RunConfig& cfg);
CheckResult check_spectral_inequality(const RunConfig& cfg);
CheckResult check_average_identity(const RunConfig& cfg);
CheckResult check_orbit_bound(const RunConfig& cfg);
CheckResult check_counting_function(const RunConfig& cfg);
GrowthStudy run_growth_study(const RunConfig& cfg, int w_lo = 12, int w_hi = 60, int w_step = 4);
CheckResult check_growth_exponents(const GrowthStudy& study, const RunConfig& cfg);
CheckResult check_cusp_localization(const GrowthStudy& study);
CheckResult check_sym_square(const RunConfig& cfg);
CheckResult check_subgroup_comparison(const RunConfig& cfg);

/// Supplementary module checks.
CheckResult check_h_function(const RunConfig& cfg);
CheckResult check_horocycle_integral_test(const RunConfig& cfg);
CheckResult check_c_delta(const RunConfig& cfg);
CheckResult check_bergman_invariance(const RunConfig& cfg);

/// Criteria 1..13 in order.
std::vector<CheckResult> run_acceptance(const RunConfig& cfg);

/// "heat", "lemma", "bounds", "forms" or "all". Throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg);

}  // namespace supnorm
