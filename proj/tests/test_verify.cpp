#include <doctest.h>

#include "supnorm/config.hpp"
#include "supnorm/verify.hpp"

using namespace supnorm;

TEST_CASE("config: parsing, hashing, overrides") {
  RunConfig a, b;
  CHECK(a.hash() == b.hash());
  b.threads = 8;
  b.cache_dir = "/elsewhere";
  CHECK(a.hash() == b.hash());
  b.set("seed", "42");
  CHECK(a.hash() != b.hash());
  CHECK_THROWS_AS(b.set("no_such_key", "1"), std::invalid_argument);
  CHECK_THROWS_AS(b.set("rel_tol", "abc"), std::invalid_argument);
  CHECK_THROWS_AS(b.set("refine", "maybe"), std::invalid_argument);
  b.set("refine", "on");
  CHECK(b.refine);
  CHECK(a.quadrature().rel_tol == 1e-9);
}

TEST_CASE("lemma suite changes samples with the seed but not the verdict") {
  RunConfig a, b;
  b.seed = 7;
  const auto ra = check_lemma_defect(a, 2000);
  const auto rb = check_lemma_defect(b, 2000);
  CHECK(ra.pass);
  CHECK(rb.pass);
  CHECK(ra.detail != rb.detail);
}

TEST_CASE("fast criteria pass") {
  RunConfig cfg;
  CHECK(check_laplace_identity(cfg).pass);
  CHECK(check_eigenvalue_identity(cfg).pass);
  CHECK(check_subgroup_comparison(cfg).pass);
  CHECK(check_horocycle_integral_test(cfg).pass);
  CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);
}
