#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "braidoka/braid.hpp"
#include "braidoka/error.hpp"
#include "braidoka/sl2z.hpp"
#include "oracles.hpp"

using namespace braidoka;
using oracle::M;

namespace {

BraidWord B(const char* s) { return BraidWord::parse(s, 3); }

M theta_oracle(const std::vector<int>& w) {
  M r{1, 0, 0, 1};
  for (int l : w) {
    const M g = std::abs(l) == 1 ? M{1, 1, 0, 1} : M{1, 0, -1, 1};
    r = oracle::mul(r, l > 0 ? g : oracle::inv(g));
  }
  return r;
}

SL2Matrix to_big(const M& m) { return SL2Matrix(m.a, m.b, m.c, m.d); }

}  // namespace

TEST_CASE("determinant is checked") {
  CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), Error);
  CHECK_NOTHROW(SL2Matrix(2, 1, 1, 1));
}

TEST_CASE("theta examples") {
  CHECK(theta(B("1")) == SL2Matrix(1, 1, 0, 1));
  CHECK(theta(BraidWord::delta(3, 2)) == -SL2Matrix::identity());
  CHECK(theta(BraidWord::delta(3, 4)) == SL2Matrix::identity());
  CHECK(theta(B("1 2 1")) == theta(B("2 1 2")));
  try {
    theta(BraidWord::parse("1", 4));
    FAIL("expected WrongStrandCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongStrandCount);
  }
}

TEST_CASE("theta is a homomorphism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    std::vector<int> u, v;
    for (int i = 0; i < static_cast<int>(rng() % 11); ++i) u.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 2)));
    for (int i = 0; i < static_cast<int>(rng() % 11); ++i) v.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 2)));
    const BraidWord bu(3, u), bv(3, v);
    CHECK(theta(bu * bv) == theta(bu) * theta(bv));
    CHECK(oracle::from(theta(bu)) == theta_oracle(u));
  }
}

TEST_CASE("kernel words have exponent sum divisible by 12") {
  for (int len = 0; len <= 12; len += 2)
    oracle::for_each_word(2, len, [&](const std::vector<int>& w) {
      if (len > 8 && w[0] != 1) return;  // keep the enumeration small
      if (theta_oracle(w) == M{1, 0, 0, 1}) {
        BraidWord b(3, w);
        CHECK(exponent_sum(b) % 12 == 0);
        CHECK(oracle::braid_equal_by_action(b, BraidWord::delta(3, 4 * (exponent_sum(b) / 12))));
      }
    });
}

TEST_CASE("matrix_class examples") {
  auto c = matrix_class(SL2Matrix(0, 1, -1, 1));
  CHECK(c.kind == MatrixKind::Elliptic);
  CHECK(c.order == 6);
  CHECK(theta(B("1 2")) == SL2Matrix(0, 1, -1, 1));
  CHECK(SL2Matrix(0, 1, -1, 1).pow(6) == SL2Matrix::identity());
  CHECK(matrix_class(SL2Matrix(1, 5, 0, 1)).kind == MatrixKind::Parabolic);
  CHECK(matrix_class(SL2Matrix(2, 1, 1, 1)).kind == MatrixKind::Hyperbolic);
  CHECK(theta(B("1 -2")) == SL2Matrix(2, 1, 1, 1));
  CHECK(matrix_class(-SL2Matrix::identity()).order == 2);
  CHECK(matrix_class(SL2Matrix::identity()).kind == MatrixKind::CentralI);
}

TEST_CASE("elliptic orders are the true orders") {
  for (const auto& m : oracle::sl2_ball(6)) {
    const auto c = matrix_class(to_big(m));
    if (c.order == 0) continue;
    M p{1, 0, 0, 1};
    int k = 0;
    do {
      p = oracle::mul(p, m);
      ++k;
    } while (!(p == M{1, 0, 0, 1}) && k < 13);
    CHECK(c.order == k);
  }
}

TEST_CASE("parabolic normal form") {
  CHECK(parabolic_normal_form(SL2Matrix(1, 3, 0, 1)) == ParabolicForm{1, 3});
  CHECK(parabolic_normal_form(SL2Matrix(1, 0, -2, 1)) == ParabolicForm{1, 2});
  CHECK(parabolic_normal_form(-SL2Matrix::identity()) == ParabolicForm{-1, 0});
  CHECK(parabolic_normal_form(SL2Matrix::identity()) == ParabolicForm{1, 0});
  CHECK_THROWS_AS(parabolic_normal_form(SL2Matrix(2, 1, 1, 1)), Error);
  // σ2^2 ~ σ1^2 by an explicit conjugator of length <= 6
  const auto ball = oracle::sl2_ball(6);
  CHECK(oracle::sl2_conjugate_by_search(M{1, 2, 0, 1}, M{1, 0, -2, 1}, ball));

  for (const auto& m : oracle::sl2_ball(7)) {
    if (std::abs(m.a + m.d) != 2) continue;
    SL2Matrix P;
    const auto f = parabolic_normal_form(to_big(m), P);
    const SL2Matrix target = SL2Matrix(1, f.m, 0, 1);
    CHECK(P.inverse() * to_big(m) * P == (f.sign > 0 ? target : -target));
  }
}

TEST_CASE("sl2z_conjugate examples") {
  const auto A = mat_A(), Bm = mat_B();
  CHECK(sl2z_conjugate(A, Bm.inverse() * A * Bm));
  CHECK_FALSE(sl2z_conjugate(SL2Matrix(1, 1, 0, 1), SL2Matrix(1, -1, 0, 1)));
  CHECK(sl2z_conjugate(theta(B("1 -2")), theta(B("-2 1"))));

  // no conjugator with entries bounded by 20
  bool found = false;
  for (long a = -20; a <= 20 && !found; ++a)
    for (long b = -20; b <= 20 && !found; ++b)
      for (long c = -20; c <= 20 && !found; ++c) {
        if (a == 0) continue;
        if ((1 + b * c) % a) continue;
        const long d = (1 + b * c) / a;
        const M p{a, b, c, d};
        if (oracle::mul(oracle::mul(oracle::inv(p), M{1, 1, 0, 1}), p) == M{1, -1, 0, 1}) found = true;
      }
  CHECK_FALSE(found);
}

TEST_CASE("hyperbolic R/L factorization round-trips") {
  for (const auto& m : oracle::sl2_ball(7)) {
    if (std::abs(m.a + m.d) <= 2) continue;
    const SL2Matrix x = to_big(m);
    const auto h = hyperbolic_form(x);
    const SL2Matrix n = h.sign > 0 ? x : -x;
    CHECK(h.conjugator.inverse() * n * h.conjugator == rl_product(h.word));
    CHECK(h.word.find('R') != std::string::npos);
    CHECK(h.word.find('L') != std::string::npos);
    CHECK(h.canonical.size() == h.word.size());
  }
  CHECK_THROWS_AS(hyperbolic_form(mat_A()), Error);
}

TEST_CASE("sl2z_conjugate agrees with conjugator search on braid images of length <= 6") {
  std::set<M> images;
  for (int len = 0; len <= 6; ++len) oracle::for_each_word(2, len, [&](const std::vector<int>& w) { images.insert(theta_oracle(w)); });
  const std::vector<M> mats(images.begin(), images.end());
  const auto ball = oracle::sl2_ball(10);

  std::size_t positives = 0, pairs = 0;
  for (const auto& x : mats) {
    std::set<M> orbit;
    for (const auto& p : ball) orbit.insert(oracle::mul(oracle::mul(oracle::inv(p), x), p));
    const SL2Matrix bx = to_big(x);
    for (const auto& y : mats) {
      const bool got = sl2z_conjugate(bx, to_big(y));
      const bool want = orbit.count(y) > 0;
      if (got != want) FAIL_CHECK("disagreement on " << bx.str() << " vs " << to_big(y).str());
      positives += want;
      ++pairs;
    }
  }
  MESSAGE(pairs << " pairs, " << positives << " conjugate");
  CHECK(positives > mats.size());
}
