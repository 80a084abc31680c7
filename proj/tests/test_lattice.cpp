#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "braidoka/error.hpp"
#include "braidoka/lattice.hpp"
#include "oracles.hpp"

using namespace braidoka;

namespace {

const cplx I(0.0, 1.0);

cplx random_point(std::mt19937_64& rng, cplx tau) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  return u(rng) + u(rng) * tau;
}

}  // namespace

TEST_CASE("wp is even and periodic") {
  std::mt19937_64 rng(1);
  const cplx tau = 1.3 * I;
  for (int t = 0; t < 10; ++t) {
    const cplx z = random_point(rng, tau);
    CHECK(std::abs(wp(-z, tau) - wp(z, tau)) < 1e-10 * (1 + std::abs(wp(z, tau))));
    CHECK(std::abs(wp(z + 1.0, I) - wp(z, I)) < 1e-9 * (1 + std::abs(wp(z, I))));
    CHECK(std::abs(wp(z + I, I) - wp(z, I)) < 1e-9 * (1 + std::abs(wp(z, I))));
    CHECK(std::abs(wp_prime(-z, tau) + wp_prime(z, tau)) < 1e-9 * (1 + std::abs(wp_prime(z, tau))));
  }
  CHECK(std::abs(wp((1.0 + I) / 2.0, I)) < 1e-6);
}

TEST_CASE("row sums agree with the plain lattice sum") {
  std::mt19937_64 rng(2);
  for (cplx tau : {I, 2.0 * I, cplx(0.5, 1.2)}) {
    const cplx z = random_point(rng, tau);
    const cplx a = wp(z, tau, 80);
    const cplx d1 = wp_direct(z, tau, 100), d2 = wp_direct(z, tau, 200);
    CHECK(std::abs(a - d2) < 1e-3 * (1 + std::abs(a)));
    CHECK(std::abs(a - d2) < std::abs(a - d1) + 1e-12);
    const cplx p = wp_prime(z, tau, 80);
    CHECK(std::abs(p - wp_prime_direct(z, tau, 150)) < 1e-3 * (1 + std::abs(p)));
  }
}

TEST_CASE("half-period values match the theta-constant formulas") {
  for (cplx tau : {I, 2.0 * I, cplx(0.5, 1.2), cplx(-0.3, 0.8), std::polar(1.0, std::numbers::pi / 3)}) {
    const auto e = e_values(tau, 80);
    const auto t = oracle::e_values_theta(tau);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(e[j] - t[j]) < 1e-9 * (1 + std::abs(t[j])));
  }
}

TEST_CASE("e-values examples") {
  auto e = e_values(I, 80);
  CHECK(std::abs(e[1] + e[0]) < 1e-6);
  CHECK(std::abs(e[2]) < 1e-6);

  // hexagonal lattice: the three values are rotations of each other
  const cplx w = std::polar(1.0, std::numbers::pi / 3);
  e = e_values(w, 80);
  const cplx omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  BranchLocus a{e}, b{{e[0] * omega, e[1] * omega, e[2] * omega}};
  CHECK(set_distance(a, b) < 1e-6);
  CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-6);

  const auto e40 = e_values(2.0 * I, 40), e80 = e_values(2.0 * I, 80);
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(e80[j].imag()) < 1e-9);
    CHECK(std::abs(e80[j] - e40[j]) < 1e-9);
  }
  CHECK(e80[0].real() > 0);
  CHECK(std::abs(e80[0] + e80[1] + e80[2]) < 1e-6);
}

TEST_CASE("sums, distinctness and modular covariance") {
  for (cplx tau : {I, 2.0 * I, cplx(0.5, 1.2)}) {
    const auto e = e_values(tau, 80);
    CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-5);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) CHECK(std::abs(e[i] - e[j]) > 1e-4);
    CHECK(set_distance(branch_locus({1.0, tau}, 80), branch_locus({1.0, tau + 1.0}, 80)) < 1e-5);
    const auto inv = branch_locus({tau, -1.0 / tau}, 80);  // same lattice
    CHECK(set_distance(branch_locus({1.0, tau}, 80), inv) < 1e-5);
  }
}

TEST_CASE("branch locus scaling and generator choice") {
  const auto base = branch_locus({1.0, I});
  CHECK(std::abs(base.e[1] + base.e[0]) < 1e-6);
  CHECK(std::abs(base.e[2]) < 1e-6);
  for (cplx alpha : {cplx(2.0, 0.0), cplx(0.3, -1.1)}) {
    const auto s = branch_locus({alpha, I});
    for (int j = 0; j < 3; ++j) CHECK(s.e[j] == (1.0 / (alpha * alpha)) * base.e[j]);
  }
  const auto spec = normalize_generators(1.0, 1.0 + I);
  CHECK(spec.tau.imag() > 0);
  CHECK(set_distance(branch_locus(spec), base) < 1e-6);
  const auto flipped = normalize_generators(1.0 + I, 1.0);
  CHECK(flipped.tau.imag() > 0);
  CHECK(set_distance(branch_locus(flipped), base) < 1e-6);
  const auto reduced = reduce_lattice({1.0, cplx(3.2, 0.1)});
  CHECK(std::abs(reduced.tau) >= 1.0 - 1e-12);
  CHECK(set_distance(branch_locus(reduced), branch_locus({1.0, cplx(3.2, 0.1)}, 200)) < 1e-6);
  CHECK_THROWS_AS(normalize_generators(1.0, 2.0), Error);
}

TEST_CASE("differential equation residual") {
  CHECK(ode_residual(1.5 * I, cplx(0.23, 0.31), 60) < 1e-6);
  const double r40 = ode_residual(1.5 * I, cplx(0.23, 0.31), 40);
  const double r80 = ode_residual(1.5 * I, cplx(0.23, 0.31), 80);
  CHECK(r80 <= r40 + 1e-9);
  CHECK_NOTHROW(ode_residual(I, cplx(0.5 + 1e-7, 0.0)));
  CHECK(ode_residual(I, cplx(0.5 + 1e-3, 0.01)) < 1e-5);
  std::mt19937_64 rng(3);
  for (cplx tau : {I, 2.0 * I, cplx(0.5, 1.2)})
    for (int t = 0; t < 5; ++t) CHECK(ode_residual(tau, random_point(rng, tau), 80) < 1e-6);
}

TEST_CASE("errors") {
  try {
    wp(1.0 + I, I);
    FAIL("expected PoleProximity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleProximity);
  }
  try {
    wp(0.3, -I);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  CHECK_NOTHROW(wp(1e-6, I));
}

TEST_CASE("path sampling") {
  const auto path = branch_locus_path(1.0, I, 2.0 * I, 4);
  REQUIRE(path.size() == 5);
  CHECK(path.front().t == 0.0);
  CHECK(path.back().tau == 2.0 * I);
  CHECK(set_distance(path[2].locus, branch_locus({1.0, 1.5 * I})) < 1e-12);
}
