#include "braidoka/three.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include "braidoka/error.hpp"

namespace braidoka {

std::string to_string(ThreeKind k) {
  switch (k) {
    case ThreeKind::Periodic: return "periodic";
    case ThreeKind::Reducible: return "reducible";
    case ThreeKind::PseudoAnosov: return "pseudoAnosov";
  }
  return "?";
}

std::string to_string(PeriodicBase b) { return b == PeriodicBase::Sigma12 ? "sigma1sigma2" : "delta"; }

double entropy_from_trace(const BigInt& trace) {
  const BigInt t = trace < 0 ? BigInt(-trace) : trace;
  if (t <= 2) return 0.0;
  const double td = t.convert_to<double>();
  return std::log((td + std::sqrt(td * td - 4.0)) / 2.0);
}

namespace {

void require3(const BraidWord& b) {
  if (b.strands() != 3) throw Error(ErrorCode::WrongStrandCount, "expected a 3-strand braid, got " + std::to_string(b.strands()));
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const BraidWord& b) {
  if (num % den != 0)
    throw Error(ErrorCode::InternalInconsistency, "non-integral parameter for braid " + b.str());
  return num / den;
}

}  // namespace

ThreeBraidClass classify3(const BraidWord& b) {
  require3(b);
  const SL2Matrix m = theta(b);
  const auto cls = matrix_class(m);
  ThreeBraidClass out;
  out.trace = m.trace();
  out.exponent_sum = exponent_sum(b);
  const std::int64_t e = out.exponent_sum;
  switch (cls.kind) {
    case MatrixKind::CentralI:
    case MatrixKind::CentralMinusI:
      out.kind = ThreeKind::Periodic;
      out.central = true;
      out.reducible_flag = true;
      out.base = PeriodicBase::Delta;
      out.power = exact_div(e, 3, b);
      out.k = 0;
      out.ell = exact_div(e, 6, b);
      if ((out.ell % 2 == 0) != (cls.kind == MatrixKind::CentralI))
        throw Error(ErrorCode::InternalInconsistency, "Δ-power parity disagrees with ϑ for " + b.str());
      break;
    case MatrixKind::Elliptic:
      out.kind = ThreeKind::Periodic;
      if (cls.order == 4) {
        out.base = PeriodicBase::Delta;
        out.power = exact_div(e, 3, b);
      } else {
        out.base = PeriodicBase::Sigma12;
        out.power = exact_div(e, 2, b);
      }
      break;
    case MatrixKind::Parabolic: {
      const auto pf = parabolic_normal_form(m);
      out.kind = ThreeKind::Reducible;
      out.k = pf.m.convert_to<std::int64_t>();
      out.ell = exact_div(e - out.k, 6, b);
      const int expected_sign = out.ell % 2 == 0 ? 1 : -1;
      if (expected_sign != pf.sign)
        throw Error(ErrorCode::InternalInconsistency, "sign of ϑ-image disagrees with (-1)^ell for " + b.str());
      break;
    }
    case MatrixKind::Hyperbolic:
      out.kind = ThreeKind::PseudoAnosov;
      out.entropy = entropy_from_trace(out.trace);
      out.module = (std::numbers::pi / 2.0) / out.entropy;
      break;
  }
  return out;
}

double entropy3(const BraidWord& b) {
  require3(b);
  return entropy_from_trace(theta(b).trace());
}

double conformal_module3(const BraidWord& b) {
  const double h = entropy3(b);
  return h == 0.0 ? std::numeric_limits<double>::infinity() : (std::numbers::pi / 2.0) / h;
}

bool conj3(const BraidWord& b1, const BraidWord& b2) {
  require3(b1);
  require3(b2);
  return exponent_sum(b1) == exponent_sum(b2) && sl2z_conjugate(theta(b1), theta(b2));
}

bool centralizer_check(const BraidWord& b, std::int64_t k) {
  require3(b);
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be nonzero");
  const auto s = BraidWord::generator(3, 1, k);
  return braid_eq(b * s, s * b);
}

// ---------------------------------------------------------------------------
// Commutator scan. Word lengths are small enough that int64 2x2 matrices are
// exact here, which keeps the pair loop cheap.

namespace {

struct M2 {
  std::int64_t a, b, c, d;
  friend bool operator==(const M2&, const M2&) = default;
};

M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
M2 inv(const M2& x) { return {x.d, -x.b, -x.c, x.a}; }
std::int64_t tr(const M2& x) { return x.a + x.d; }
bool zero_entropy(const M2& x) { return std::llabs(tr(x)) <= 2; }

constexpr M2 kId{1, 0, 0, 1};

M2 letter_matrix(int l) {
  switch (l) {
    case 1: return {1, 1, 0, 1};
    case -1: return {1, -1, 0, 1};
    case 2: return {1, 0, -1, 1};
    default: return {1, 0, 1, 1};  // -2
  }
}

struct Element {
  std::vector<int> letters;
  M2 m;
  std::int64_t e = 0;
  bool pure = false;
};

bool pure_of(const std::vector<int>& letters) {
  std::array<int, 3> pos{0, 1, 2};
  for (int l : letters) {
    const int i = std::abs(l) - 1;
    std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i + 1)]);
  }
  return pos == std::array<int, 3>{0, 1, 2};
}

Element make_element(std::vector<int> letters) {
  Element el;
  el.m = kId;
  for (int l : letters) {
    el.m = mul(el.m, letter_matrix(l));
    el.e += l > 0 ? 1 : -1;
  }
  el.pure = pure_of(letters);
  el.letters = std::move(letters);
  return el;
}

// Freely reduced words in shortlex order with alphabet 1 < -1 < 2 < -2.
std::vector<std::vector<int>> reduced_words(int maxlen) {
  static constexpr int kAlphabet[4] = {1, -1, 2, -2};
  std::vector<std::vector<int>> out{{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= maxlen; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int l : kAlphabet) {
        if (!out[i].empty() && out[i].back() == -l) continue;
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

struct Key {
  std::int64_t a, b, c, d, e;
  auto operator<=>(const Key&) const = default;
};

CommutatorPair make_pair_report(const Element& x, const Element& y) {
  CommutatorPair p;
  p.b1 = BraidWord(3, x.letters);
  p.b2 = BraidWord(3, y.letters);
  p.commutator = commutator(p.b1, p.b2);
  p.b1_pure = x.pure;
  p.b2_pure = y.pure;
  const M2 x_inv = inv(x.m);
  p.trace_b2_b1inv = tr(mul(y.m, x_inv));
  p.trace_b2_b1inv2 = tr(mul(mul(y.m, x_inv), x_inv));
  p.corollary_hypotheses_violated =
      !x.pure && !y.pure && (std::llabs(p.trace_b2_b1inv) > 2 || std::llabs(p.trace_b2_b1inv2) > 2);
  return p;
}

// Commutator [x, y] nontrivial of zero entropy. The exponent sum of a
// commutator is 0 and ker ϑ = <Δ^4> meets exponent sum 0 trivially, so the
// commutator is the identity iff its ϑ-image is.
bool hit(const Element& x, const Element& y, M2& comm) {
  comm = mul(mul(x.m, y.m), mul(inv(x.m), inv(y.m)));
  return comm != kId && zero_entropy(comm);
}

bool corollary_violated(const Element& x, const Element& y) {
  if (x.pure || y.pure) return false;
  const M2 q = mul(y.m, inv(x.m));
  return !zero_entropy(q) || !zero_entropy(mul(q, inv(x.m)));
}

struct PartialResult {
  std::int64_t tested = 0, found = 0, counterexamples = 0;
  std::vector<std::pair<std::size_t, std::size_t>> hits;
};

}  // namespace

ScanReport zero_entropy_commutator_scan(const ScanOptions& opts) {
  const int limit = opts.zero_entropy_factors ? 10 : 6;
  if (opts.maxlen < 0 || opts.maxlen > limit)
    throw Error(ErrorCode::ResourceLimit, "maxlen must be in [0, " + std::to_string(limit) + "]");
  ScanReport rep;
  rep.maxlen = opts.maxlen;
  rep.zero_entropy_factors = opts.zero_entropy_factors;
  const int jobs = std::max(1, opts.jobs);

  auto accept = [&](const Element& x, const Element& y, std::size_t i, std::size_t j, PartialResult& part) {
    ++part.found;
    if (!corollary_violated(x, y)) ++part.counterexamples;
    if (part.hits.size() < opts.keep) part.hits.emplace_back(i, j);
  };

  if (opts.sample) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> len_dist(1, std::max(1, opts.maxlen));
    std::uniform_int_distribution<int> letter_dist(0, 3);
    static constexpr int kAlphabet[4] = {1, -1, 2, -2};
    auto random_element = [&] {
      for (;;) {
        std::vector<int> w;
        const int len = len_dist(rng);
        while (static_cast<int>(w.size()) < len) {
          const int l = kAlphabet[letter_dist(rng)];
          if (!w.empty() && w.back() == -l) continue;
          w.push_back(l);
        }
        auto el = make_element(std::move(w));
        if (!opts.zero_entropy_factors || zero_entropy(el.m)) return el;
      }
    };
    PartialResult part;
    for (std::int64_t i = 0; i < *opts.sample; ++i) {
      const auto x = random_element();
      const auto y = random_element();
      ++part.tested;
      M2 comm;
      if (hit(x, y, comm)) {
        accept(x, y, 0, 0, part);
        if (rep.pairs.size() < opts.keep) rep.pairs.push_back(make_pair_report(x, y));
      }
    }
    rep.words = 2 * part.tested;
    rep.pairs_tested = part.tested;
    rep.found = part.found;
    rep.corollary_counterexamples = part.counterexamples;
    return rep;
  }

  const auto words = reduced_words(opts.maxlen);
  rep.words = static_cast<std::int64_t>(words.size());
  std::map<Key, std::size_t> seen;
  std::vector<Element> cands;
  for (const auto& w : words) {
    auto el = make_element(w);
    const Key key{el.m.a, el.m.b, el.m.c, el.m.d, el.e};
    if (!seen.emplace(key, seen.size()).second) continue;
    if (opts.zero_entropy_factors && !zero_entropy(el.m)) continue;
    cands.push_back(std::move(el));
  }
  rep.elements = static_cast<std::int64_t>(seen.size());
  rep.candidates = static_cast<std::int64_t>(cands.size());

  // Rows are dealt round-robin to workers; merging by row restores order.
  const std::size_t n = cands.size();
  std::vector<PartialResult> rows(n);
  auto worker = [&](int id) {
    for (std::size_t i = static_cast<std::size_t>(id); i < n; i += static_cast<std::size_t>(jobs)) {
      auto& part = rows[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        ++part.tested;
        M2 comm;
        if (hit(cands[i], cands[j], comm)) accept(cands[i], cands[j], i, j, part);
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& part : rows) {
    rep.pairs_tested += part.tested;
    rep.found += part.found;
    rep.corollary_counterexamples += part.counterexamples;
    for (const auto& [i, j] : part.hits) {
      if (rep.pairs.size() >= opts.keep) break;
      rep.pairs.push_back(make_pair_report(cands[i], cands[j]));
    }
  }
  return rep;
}

}  // namespace braidoka
