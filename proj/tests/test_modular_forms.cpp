#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <unistd.h>

#include "supnorm/basis_cache.hpp"
#include "supnorm/bergman.hpp"
#include "supnorm/petersson.hpp"
#include "supnorm/qexpansion.hpp"

using namespace supnorm;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force divisor sum.
long long sigma_oracle(int p, int n) {
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += static_cast<long long>(std::llround(std::pow(d, p)));
  return s;
}

const OrthonormalBasis& basis24() {
  static const OrthonormalBasis b = orthonormal_basis(24);
  return b;
}

}  // namespace

TEST_CASE("oracle: divisor sums and Eisenstein coefficients from brute-force sums") {
  const auto e4 = eisenstein_series_exact(4, 40);
  const auto e6 = eisenstein_series_exact(6, 40);
  CHECK(e4.coeffs[0] == 1);
  CHECK(e6.coeffs[0] == 1);
  for (int n = 1; n <= 40; ++n) {
    CHECK(divisor_sigma(3, n) == sigma_oracle(3, n));
    CHECK(e4.coeffs[n] == 240 * sigma_oracle(3, n));
    CHECK(e6.coeffs[n] == -504 * sigma_oracle(5, n));
  }
}

TEST_CASE("oracle: <Delta, Delta> by tensor Gauss-Legendre vs adaptive rule") {
  const auto d = delta_form(50);
  const long double adaptive = petersson_inner(d, d).real();
  const long double tensor = petersson_inner_tensor(d, d);
  CHECK(static_cast<double>(adaptive) == Approx(static_cast<double>(tensor)).epsilon(1e-6));
  // published value of the Petersson norm of Delta
  CHECK(static_cast<double>(adaptive) == Approx(1.035362056804320922e-6).epsilon(1e-12));
}

TEST_CASE("oracle: horocycle integral by quadrature vs Parseval") {
  const auto d = delta_form(50);
  for (double y : {0.6, 0.955, 2.0}) {
    CHECK(fourier_square_integral(d, y).value == Approx(horocycle_integral_quadrature(d, y)).epsilon(1e-9));
  }
  for (const auto& f : basis24().forms) {
    CHECK(fourier_square_integral(f, 1.9).value == Approx(horocycle_integral_quadrature(f, 1.9)).epsilon(1e-9));
  }
}

TEST_CASE("Eisenstein and Delta examples") {
  const auto e4 = eisenstein_series_exact(4, 3);
  CHECK(e4.coeffs[1] == 240);
  CHECK(e4.coeffs[2] == 2160);
  const auto e6 = eisenstein_series_exact(6, 3);
  CHECK(e6.coeffs[1] == -504);
  CHECK(e6.coeffs[2] == -16632);
  CHECK(divisor_sigma(3, 6) == divisor_sigma(3, 2) * divisor_sigma(3, 3));
  const auto d = delta_form_exact(12);
  const long long tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944};
  for (int n = 0; n <= 12; ++n) CHECK(d.coeffs[n] == tau[n]);
  CHECK(d.coeffs[6] == d.coeffs[2] * d.coeffs[3]);
  CHECK(d.coeffs[4] == d.coeffs[2] * d.coeffs[2] - 2048);  // tau(p^2) = tau(p)^2 - p^11
  CHECK(to_qexpansion(d).is_cusp_form());
}

TEST_CASE("dimensions and monomials") {
  CHECK(cusp_form_dimension(12) == 1);
  CHECK(cusp_form_dimension(14) == 0);
  CHECK(cusp_form_dimension(24) == 2);
  CHECK(cusp_form_dimension(26) == 1);
  CHECK(cusp_form_dimension(36) == 3);
  CHECK(cusp_form_dimension(8) == 0);
  for (int w = 12; w <= 60; w += 2) CHECK(static_cast<int>(monomial_basis(w, 10).size()) == cusp_form_dimension(w));
  const auto m26 = monomial_exponents(26);
  REQUIRE(m26.size() == 1);
  CHECK(m26[0].delta == 1);
  CHECK(m26[0].e4 == 2);
  CHECK(m26[0].e6 == 1);
  CHECK(default_n_terms(12) == 50);
  CHECK(default_n_terms(60) == 120);
}

TEST_CASE("evaluation") {
  QExpansion f;
  f.weight = 12;
  f.coeffs = {1.0L};
  refresh_coefficient_bound(f);
  for (double y : {0.6, 1.0, 3.0}) {
    const auto v = evaluate_qexp(f, UpperHalfPoint(0.0, y));
    CHECK(static_cast<double>(v.value.real()) == Approx(std::exp(-2.0 * kPi * y)).epsilon(1e-15));
    CHECK(std::abs(static_cast<double>(v.value.imag())) < 1e-18);
  }
  CHECK(fourier_square_integral(f, 1.3).value == Approx(std::pow(1.3, 12) * std::exp(-4.0 * kPi * 1.3)).epsilon(1e-14));
  CHECK_THROWS_AS(evaluate_qexp(f, UpperHalfPoint(0.0, 0.3)), std::domain_error);
  // truncation certificate covers the difference to a longer expansion
  const auto d50 = delta_form(50), d200 = delta_form(200);
  const UpperHalfPoint z(0.2, 0.55);
  const auto a = evaluate_qexp(d50, z), b = evaluate_qexp(d200, z);
  CHECK(std::abs(a.value - b.value) <= a.trunc_err);
}

TEST_CASE("Petersson product is Hermitian and bilinear") {
  const auto& fs = monomial_basis(24, default_n_terms(24));
  const auto ab = petersson_inner(fs[0], fs[1]);
  const auto ba = petersson_inner(fs[1], fs[0]);
  CHECK(static_cast<double>(ab.real()) == Approx(static_cast<double>(ba.real())).epsilon(1e-12));
  CHECK(static_cast<double>(ab.imag()) == Approx(-static_cast<double>(ba.imag())).scale(std::abs(static_cast<double>(ab.real()))));
  CHECK(petersson_inner(fs[0], fs[0]).real() > 0);
  const auto two = linear_combination({fs[0]}, {2.0L});
  CHECK(static_cast<double>(petersson_inner(two, fs[1]).real()) == Approx(2.0 * static_cast<double>(ab.real())).epsilon(1e-12));
  CHECK_THROWS_AS(petersson_inner(delta_form(50), fs[0]), std::invalid_argument);
  CHECK_THROWS_AS(petersson_inner(eisenstein_series(4, 10), eisenstein_series(4, 10)), std::invalid_argument);
}

TEST_CASE("orthonormal bases") {
  const auto b12 = orthonormal_basis(12);
  REQUIRE(b12.dimension() == 1);
  CHECK(static_cast<double>(petersson_inner(b12.forms[0], b12.forms[0]).real()) == Approx(1.0).epsilon(1e-6));
  const auto& b = basis24();
  REQUIRE(b.dimension() == 2);
  const auto g = petersson_gram(b.forms);
  CHECK(std::abs(static_cast<double>(g(0, 0)) - 1.0) < 1e-6);
  CHECK(std::abs(static_cast<double>(g(1, 1)) - 1.0) < 1e-6);
  CHECK(std::abs(static_cast<double>(g(0, 1))) < 1e-6);
  CHECK(b.gram_residual < 1e-6);
  BasisOptions desc;
  desc.order = MonomialOrder::DeltaPowerDescending;
  const auto bd = orthonormal_basis(24, {}, desc);
  for (const UpperHalfPoint z : {UpperHalfPoint(0.1, 1.2), UpperHalfPoint(-0.4, 3.0), UpperHalfPoint(0.0, 1.0)}) {
    CHECK(bergman_kernel_diag(24, z, bd) == Approx(bergman_kernel_diag(24, z, b)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(orthonormal_basis(13), std::invalid_argument);
}

TEST_CASE("Bergman kernel invariance") {
  const auto b = orthonormal_basis(12);
  const UpperHalfPoint z(0.3, 1.2);
  const double s = bergman_kernel_diag(12, z, b);
  CHECK(s > 0.0);
  CHECK(bergman_kernel_diag(12, UpperHalfPoint(1.3, 1.2), b) == Approx(s).epsilon(1e-8));
  CHECK(bergman_kernel_diag_any(mobius_apply(GroupElement::S(), z), b) == Approx(s).epsilon(1e-6));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.9, 3.0);
  for (int i = 0; i < 20; ++i) {
    const UpperHalfPoint w(ux(rng), uy(rng));
    const GroupElement g(2, 1, 5, 3);
    CHECK(bergman_kernel_diag_any(mobius_apply(g, w), basis24()) ==
          Approx(bergman_kernel_diag(24, w, basis24())).epsilon(1e-6));
  }
  const auto cert = bergman_kernel_diag_certified(12, z, b);
  CHECK(cert.value == Approx(s).epsilon(1e-12));
  CHECK(cert.tail_bound >= 0.0);
  CHECK_THROWS_AS(bergman_kernel_diag(24, z, b), std::invalid_argument);
}

TEST_CASE("average identity for small weights") {
  for (int w : {12, 24}) {
    const auto b = orthonormal_basis(w);
    CHECK(static_cast<double>(bergman_average(b).value) == Approx(b.dimension()).epsilon(5e-3));
  }
}

TEST_CASE("Laplacian: constants and eigenfunctions") {
  const ComplexField one = [](const UpperHalfPoint&) { return std::complex<double>(1.0, 0.0); };
  CHECK(std::abs(apply_laplacian_fd(one, 0, UpperHalfPoint(0.1, 1.0), 1e-3)) < 1e-9);
  for (const auto& f : {delta_form(60), monomial_basis(16, 60).front()}) {
    const int k = f.weight / 2;
    const auto field = maass_field(f);
    const UpperHalfPoint z(0.21, 1.37);
    const auto phi = field(z);
    auto residual = [&](double h) {
      return std::abs(apply_laplacian_fd(field, k, z, h) - double(k * (1 - k)) * phi) / std::abs(double(k * (1 - k)) * phi);
    };
    CHECK(residual(1e-3) < 1e-3);
    CHECK(residual(1e-2) / residual(5e-3) == Approx(4.0).epsilon(0.2));
  }
  CHECK_THROWS_AS(apply_laplacian_fd(one, 0, UpperHalfPoint(0.0, 0.5), 0.6), std::invalid_argument);
}

TEST_CASE("symmetric square values") {
  double lo = INFINITY, hi = 0.0;
  for (int w : {12, 16, 18, 20, 22, 26}) {
    const double L = sym_square_L_from_norm(w);
    lo = std::min(lo, L);
    hi = std::max(hi, L);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 3.0);
  CHECK_THROWS_AS(sym_square_L_from_norm(24), std::invalid_argument);
}

TEST_CASE("basis cache round trip") {
  namespace fs = std::filesystem;
  const auto dir = (fs::temp_directory_path() / ("supnorm_test_cache_" + std::to_string(::getpid()))).string();
  fs::remove_all(dir);
  const auto& b = basis24();
  const auto key = basis_cache_key(24, {}, {});
  save_cached_basis(dir, b, key);
  const auto back = load_cached_basis(dir, 24, key);
  REQUIRE(back.has_value());
  REQUIRE(back->dimension() == b.dimension());
  for (int j = 0; j < b.dimension(); ++j) CHECK(back->forms[j].coeffs == b.forms[j].coeffs);
  CHECK_FALSE(load_cached_basis(dir, 24, "0000000000000000").has_value());
  QuadratureConfig other;
  other.rel_tol = 1e-10;
  CHECK(basis_cache_key(24, other, {}) != key);
  const auto via = cached_orthonormal_basis(24, {}, {}, dir);
  CHECK(via.forms[1].coeffs == b.forms[1].coeffs);
  CHECK_THROWS_AS(deserialize_basis("{\"format\": \"other\"}"), std::runtime_error);
  fs::remove_all(dir);
}
