#include "braidoka/sl2z.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidoka/braid.hpp"
#include "braidoka/error.hpp"

namespace braidoka {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

// s*x + t*y = gcd(x, y) >= 0
BigInt ext_gcd(const BigInt& x, const BigInt& y, BigInt& s, BigInt& t) {
  BigInt r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return r0;
}

}  // namespace

SL2Matrix::SL2Matrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw Error(ErrorCode::InvalidArgument, "determinant is not 1: " + str());
}

SL2Matrix SL2Matrix::inverse() const { return {d_, -b_, -c_, a_}; }

SL2Matrix SL2Matrix::operator-() const { return {-a_, -b_, -c_, -d_}; }

SL2Matrix SL2Matrix::pow(long k) const {
  SL2Matrix base = k >= 0 ? *this : inverse();
  SL2Matrix out;
  for (unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k); e; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

std::string SL2Matrix::str() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
          x.c() * y.b() + x.d() * y.d()};
}

SL2Matrix mat_A() { return {1, 1, 0, 1}; }
SL2Matrix mat_B() { return {1, 0, -1, 1}; }
SL2Matrix mat_R() { return {1, 1, 0, 1}; }
SL2Matrix mat_L() { return {1, 0, 1, 1}; }

SL2Matrix theta(const BraidWord& b) {
  if (b.strands() != 3) throw Error(ErrorCode::WrongStrandCount, "ϑ is defined on B3 only");
  static const SL2Matrix gens[4] = {mat_A(), mat_B(), mat_A().inverse(), mat_B().inverse()};
  SL2Matrix m;
  for (int l : b.letters()) {
    const int idx = (l > 0 ? 0 : 2) + (std::abs(l) - 1);
    m = m * gens[idx];
  }
  return m;
}

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::CentralI: return "central+I";
    case MatrixKind::CentralMinusI: return "central-I";
    case MatrixKind::Elliptic: return "elliptic";
    case MatrixKind::Parabolic: return "parabolic";
    case MatrixKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

MatrixClass matrix_class(const SL2Matrix& m) {
  if (m == SL2Matrix::identity()) return {MatrixKind::CentralI, 1};
  if (m == -SL2Matrix::identity()) return {MatrixKind::CentralMinusI, 2};
  const BigInt t = m.trace();
  if (t == 0) return {MatrixKind::Elliptic, 4};
  if (t == 1) return {MatrixKind::Elliptic, 6};
  if (t == -1) return {MatrixKind::Elliptic, 3};
  if (t == 2 || t == -2) return {MatrixKind::Parabolic, 0};
  return {MatrixKind::Hyperbolic, 0};
}

ParabolicForm parabolic_normal_form(const SL2Matrix& m, SL2Matrix& conjugator) {
  const auto cls = matrix_class(m);
  if (cls.kind == MatrixKind::CentralI || cls.kind == MatrixKind::CentralMinusI) {
    conjugator = SL2Matrix::identity();
    return {cls.kind == MatrixKind::CentralI ? 1 : -1, 0};
  }
  if (cls.kind != MatrixKind::Parabolic) throw Error(ErrorCode::NotParabolic, m.str());
  const int sign = m.trace() > 0 ? 1 : -1;
  const SL2Matrix n = sign > 0 ? m : -m;
  // A primitive integer vector in ker(N - I).
  BigInt r1 = n.a() - 1, r2 = n.b();
  if (r1 == 0 && r2 == 0) {
    r1 = n.c();
    r2 = n.d() - 1;
  }
  BigInt s, t;
  const BigInt g = ext_gcd(abs_big(r2), abs_big(r1), s, t);
  const BigInt p = r2 / g, q = -r1 / g;
  ext_gcd(p, q, s, t);  // s p + t q = 1
  const SL2Matrix P(p, -t, q, s);
  const SL2Matrix conj = P.inverse() * n * P;
  if (conj.a() != 1 || conj.c() != 0 || conj.d() != 1)
    throw Error(ErrorCode::InternalInconsistency, "parabolic reduction failed for " + m.str());
  conjugator = P;
  return {sign, conj.b()};
}

ParabolicForm parabolic_normal_form(const SL2Matrix& m) {
  SL2Matrix unused;
  return parabolic_normal_form(m, unused);
}

SL2Matrix elliptic_reduced(const SL2Matrix& m) {
  if (matrix_class(m).kind != MatrixKind::Elliptic)
    throw Error(ErrorCode::InvalidArgument, "not elliptic: " + m.str());
  // Conjugation acts on the definite form (c, d - a, -b) by unimodular
  // substitution: T^s shifts the middle coefficient by 2s*c, S swaps the
  // outer coefficients. Gauss reduction to |B| <= |A| <= |C| with
  // B in (-|A|, |A|] then picks one representative per class.
  const SL2Matrix S(0, -1, 1, 0);
  SL2Matrix cur = m;
  for (;;) {
    const BigInt A = cur.c();
    const BigInt B = cur.d() - cur.a();
    const BigInt absA = abs_big(A);
    BigInt s = floor_div(absA - B, 2 * absA);
    if (A < 0) s = -s;
    if (s != 0) {
      const SL2Matrix T(1, s, 0, 1);
      cur = T.inverse() * cur * T;
    }
    const BigInt C = -cur.b();
    if (abs_big(cur.c()) > abs_big(C)) {
      cur = S.inverse() * cur * S;
      continue;
    }
    if (abs_big(cur.c()) == abs_big(C) && cur.d() - cur.a() < 0) cur = S.inverse() * cur * S;
    return cur;
  }
}

// ---------------------------------------------------------------------------

namespace {

// Sign of (u + e*sqrt(D))/w - p/q for q > 0, w != 0 and D not a square.
int compare_quadratic(const BigInt& p, const BigInt& q, const BigInt& u, int e, const BigInt& D, const BigInt& w) {
  const BigInt K = q * u - p * w;
  int s;
  if (e > 0)
    s = K >= 0 ? 1 : sign_of(q * q * D - K * K);
  else
    s = K <= 0 ? -1 : sign_of(K * K - q * q * D);
  return sign_of(w) * s;
}

std::string least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

}  // namespace

SL2Matrix rl_product(const std::string& word) {
  SL2Matrix m;
  for (char ch : word) {
    if (ch == 'R')
      m = m * mat_R();
    else if (ch == 'L')
      m = m * mat_L();
    else
      throw Error(ErrorCode::ParseError, "R/L word contains '" + std::string(1, ch) + "'");
  }
  return m;
}

HyperbolicForm hyperbolic_form(const SL2Matrix& m) {
  if (matrix_class(m).kind != MatrixKind::Hyperbolic) throw Error(ErrorCode::InvalidArgument, "not hyperbolic: " + m.str());
  HyperbolicForm out;
  out.sign = m.trace() > 0 ? 1 : -1;
  const SL2Matrix n = out.sign > 0 ? m : -m;
  const BigInt t = n.trace();
  const BigInt D = t * t - 4;
  // Fixed points of x -> (ax+b)/(cx+d): (u ± sqrt(D)) / w. The '+' one is
  // attracting. c != 0 because D is never a square for t > 2.
  const BigInt u = n.a() - n.d();
  const BigInt w = 2 * n.c();
  const BigInt root = boost::multiprecision::sqrt(D);

  // Integer n0 with n0 < x+ < n0 + 1.
  BigInt n0 = floor_div(u + root, w);
  while (compare_quadratic(n0, 1, u, +1, D, w) < 0) n0 -= 1;
  while (compare_quadratic(n0 + 1, 1, u, +1, D, w) > 0) n0 += 1;

  // Farey interval [p1/q1, p2/q2] around x+ that excludes x-.
  BigInt p1 = n0, q1 = 1, p2 = n0 + 1, q2 = 1;
  for (;;) {
    const bool minus_inside =
        compare_quadratic(p1, q1, u, -1, D, w) > 0 && compare_quadratic(p2, q2, u, -1, D, w) < 0;
    if (!minus_inside) break;
    const BigInt pm = p1 + p2, qm = q1 + q2;
    if (compare_quadratic(pm, qm, u, +1, D, w) < 0) {
      p2 = pm;
      q2 = qm;
    } else {
      p1 = pm;
      q1 = qm;
    }
  }
  const SL2Matrix P(p2, p1, q2, q1);
  SL2Matrix cur = P.inverse() * n * P;
  if (cur.a() < 0 || cur.b() < 0 || cur.c() < 0 || cur.d() < 0)
    throw Error(ErrorCode::InternalInconsistency, "positive-cone conjugation failed for " + m.str());
  out.conjugator = P;
  while (cur != SL2Matrix::identity()) {
    if (cur.a() >= cur.c() && cur.b() >= cur.d()) {
      out.word += 'R';
      cur = SL2Matrix(cur.a() - cur.c(), cur.b() - cur.d(), cur.c(), cur.d());
    } else {
      out.word += 'L';
      cur = SL2Matrix(cur.a(), cur.b(), cur.c() - cur.a(), cur.d() - cur.b());
    }
  }
  out.canonical = least_rotation(out.word);
  return out;
}

bool sl2z_conjugate(const SL2Matrix& m, const SL2Matrix& n) {
  const auto cm = matrix_class(m), cn = matrix_class(n);
  if (cm.kind != cn.kind || m.trace() != n.trace()) return false;
  switch (cm.kind) {
    case MatrixKind::CentralI:
    case MatrixKind::CentralMinusI: return m == n;
    case MatrixKind::Parabolic: return parabolic_normal_form(m) == parabolic_normal_form(n);
    case MatrixKind::Elliptic: return elliptic_reduced(m) == elliptic_reduced(n);
    case MatrixKind::Hyperbolic: {
      const auto hm = hyperbolic_form(m), hn = hyperbolic_form(n);
      return hm.sign == hn.sign && hm.canonical == hn.canonical;
    }
  }
  return false;
}

}  // namespace braidoka
