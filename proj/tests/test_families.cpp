#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "braidoka/error.hpp"
#include "braidoka/families.hpp"

using namespace braidoka;

namespace {

// Ascending coefficients of the monic polynomial with the given roots.
std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const auto& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("discriminant examples") {
  CHECK(std::abs(discriminant_from_roots({1.0, -1.0}) - 4.0) < 1e-15);
  // ζ^3 - w has discriminant -27 w^2
  for (cplx w : {cplx(1, 0), cplx(0.3, -2.0), cplx(-1.5, 0.25)}) {
    const cplx d = discriminant_from_coeffs({-w, 0.0, 0.0, 1.0});
    CHECK(std::abs(d + 27.0 * w * w) < 1e-12 * std::abs(27.0 * w * w));
  }
  const double pi = std::numbers::pi;
  std::vector<cplx> cube_roots;
  for (int j = 0; j < 3; ++j) cube_roots.push_back(std::polar(1.0, 2 * pi * j / 3));
  CHECK(std::abs(discriminant_from_roots(cube_roots) + 27.0) < 1e-12);
  CHECK(code_of([] { discriminant_from_roots({1.0}); }) == ErrorCode::DegreeTooSmall);
  CHECK(code_of([] { discriminant_from_coeffs({1.0, 1.0}); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("coefficient and root routes agree") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int tested = 0;
  while (tested < 400) {
    const int n = 3 + tested % 2;
    std::vector<cplx> roots;
    for (int i = 0; i < n; ++i) roots.emplace_back(u(rng), u(rng));
    double sep = 1e9;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sep = std::min(sep, std::abs(roots[i] - roots[j]));
    if (sep < 0.3) continue;
    const cplx a = discriminant_from_roots(roots);
    auto coeffs = poly_from_roots(roots);
    const cplx b = discriminant_from_coeffs(coeffs);
    CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
    // non-monic input is divided through by the leading coefficient
    for (auto& c : coeffs) c *= 2.0;
    const cplx b2 = discriminant_from_coeffs(coeffs);
    CHECK(std::abs(b2 - std::pow(2.0, 2 * n - 2) * a) <= 1e-10 * std::abs(b2));
    ++tested;
  }
}

TEST_CASE("discriminant index of the model family") {
  CHECK(discriminant_index(LaurentFamily::model(3, 2)).index == 4);
  CHECK(discriminant_index(LaurentFamily::model(5, 1)).index == 4);
  CHECK(discriminant_index(LaurentFamily::model(3, 1)).index == 2);
  for (int n : {3, 5, 7})
    for (int k : {1, 2, 3}) {
      const auto r = discriminant_index(LaurentFamily::model(n, k), 256);
      CHECK(r.index == k * (n - 1));
      CHECK(r.min_abs_discriminant > 0.0);
      CHECK(r.samples_used <= 4096);
      // stable under doubling once converged
      CHECK(discriminant_index(LaurentFamily::model(n, k), 2 * r.samples_used).index == r.index);
    }
  // negative powers wind the other way
  CHECK(discriminant_index(LaurentFamily::model(3, -1)).index == -2);
}

TEST_CASE("constant and JSON families") {
  const auto c = LaurentFamily::from_json(R"({"degree":2,"coeffs":{"0":{"0":-2}}})");
  CHECK(discriminant_index(c).index == 0);
  const auto f = LaurentFamily::from_json(R"({"degree":3,"coeffs":{"0":{"2":[−1,0]}}})");
  CHECK(discriminant_index(f).index == 4);
  CHECK(code_of([] { LaurentFamily::from_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { LaurentFamily::from_json(R"({"degree":3,"coeffs":{"5":{"0":1}}})"); }) == ErrorCode::ParseError);
  // (ζ - z)(ζ - 1) has a double root at z = 1
  const auto bad = LaurentFamily::from_json(R"({"degree":2,"coeffs":{"0":{"1":1},"1":{"0":-1,"1":-1}}})");
  CHECK(code_of([&] { discriminant_index(bad); }) == ErrorCode::SeparabilityFailure);
}

TEST_CASE("theorem 1 verdicts") {
  const double m = 2 * std::numbers::pi * 3 / std::log(2.0) + 1;
  CHECK(thm1_verdict(3, m, 6) == Thm1Verdict::Reducible);
  CHECK(thm1_verdict(3, m, 2) == Thm1Verdict::Inconclusive);
  CHECK(thm1_verdict(4, 1e6, 8) == Thm1Verdict::Inconclusive);
  CHECK(thm1_verdict(3, m - 2, 6) == Thm1Verdict::Inconclusive);
  CHECK(thm1_verdict(3, 30, 6) == Thm1Verdict::Reducible);
  CHECK(thm1_threshold(3) == doctest::Approx(27.19).epsilon(1e-3));
  CHECK(to_string(Thm1Verdict::Reducible) == "reducible");
}

TEST_CASE("entropy and module bounds") {
  CHECK(penner_bound(0, 4) == doctest::Approx(std::log(2.0) / 4));
  CHECK(nbraid_entropy_lower(3) == doctest::Approx(0.17328).epsilon(1e-4));
  CHECK(nbraid_module_upper(3) == doctest::Approx(6 * std::numbers::pi / std::log(2.0)));
  CHECK(std::log((3 + std::sqrt(5.0)) / 2) >= nbraid_entropy_lower(3));
  CHECK(code_of([] { penner_bound(0, 3); }) == ErrorCode::SignatureOutOfRange);
  CHECK(code_of([] { nbraid_entropy_lower(2); }) == ErrorCode::SignatureOutOfRange);
  CHECK(code_of([] { nbraid_module_upper(2); }) == ErrorCode::SignatureOutOfRange);
}
