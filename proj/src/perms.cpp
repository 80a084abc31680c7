#include "braidoka/perms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "braidoka/error.hpp"
#include "text_util.hpp"

namespace braidoka {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  const std::string s(text);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "cycle notation '" + s + "': " + why);
  };
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') fail("expected '('");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) fail("unbalanced parenthesis");
    std::string inner = s.substr(pos + 1, close - pos - 1);
    std::replace(inner.begin(), inner.end(), ',', ' ');  // "1,2,3" is accepted too
    std::vector<int> cyc;
    for (const auto& tok : detail::split_ws(inner)) {
      const auto v = detail::parse_int(tok, s);
      if (v < 1 || v > n) fail("point out of range");
      if (used[static_cast<std::size_t>(v)]) fail("point repeated");
      used[static_cast<std::size_t>(v)] = true;
      cyc.push_back(static_cast<int>(v));
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      im[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::int64_t k) const {
  const int ord = order();
  std::int64_t e = ((k % ord) + ord) % ord;
  auto out = identity(size());
  for (std::int64_t i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::is_full_cycle() const {
  const auto cs = cycles();
  return size() >= 2 && cs.size() == 1 && static_cast<int>(cs.front().size()) == size();
}

int Permutation::order() const {
  int ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::InvalidArgument, "permutation degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) im[static_cast<std::size_t>(i - 1)] = q(p(i));
  return Permutation(std::move(im));
}

bool commute(const Permutation& p, const Permutation& q) { return p * q == q * p; }

bool is_transitive(const std::vector<Permutation>& gens, int n) {
  if (n <= 1) return true;
  std::vector<bool> reached(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> stack{1};
  reached[1] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      for (int y : {g(x), g.inverse()(x)}) {
        if (!reached[static_cast<std::size_t>(y)]) {
          reached[static_cast<std::size_t>(y)] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  return count == n;
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CyclicGenerator abelian_transitive_generator(const std::vector<Permutation>& gens, int n) {
  if (!is_prime(n)) throw Error(ErrorCode::NotPrime, std::to_string(n) + " is not prime");
  for (const auto& g : gens)
    if (g.size() != n) throw Error(ErrorCode::InvalidArgument, "generator degree differs from n");
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j]))
        throw Error(ErrorCode::NotCommuting, gens[i].cycle_string() + " and " + gens[j].cycle_string());
  if (!is_transitive(gens, n)) throw Error(ErrorCode::NotTransitive, "generated group is not transitive");

  // The group is regular of prime order, so every nontrivial generator is an
  // n-cycle. Pick the one sending 1 to the smallest point.
  const Permutation* best = nullptr;
  for (const auto& g : gens)
    if (g.is_full_cycle() && (!best || g(1) < (*best)(1))) best = &g;
  if (!best) throw Error(ErrorCode::InternalInconsistency, "no n-cycle among generators");

  CyclicGenerator out{*best, {}};
  for (const auto& g : gens) {
    int e = 0;
    auto p = Permutation::identity(n);
    while (p != g) {
      p = p * *best;
      if (++e >= n) throw Error(ErrorCode::InternalInconsistency, "generator is not a power of the cycle");
    }
    out.exponents.push_back(e);
  }
  return out;
}

GeneratorPair lemma5_generators(const Permutation& psi_e1, const Permutation& psi_e2) {
  if (psi_e1.size() != 3 || psi_e2.size() != 3 || !commute(psi_e1, psi_e2) ||
      !is_transitive({psi_e1, psi_e2}, 3))
    throw Error(ErrorCode::NotAbelianTransitive,
                "images " + psi_e1.cycle_string() + ", " + psi_e2.cycle_string());
  const auto e1 = FreeWord::generator(1);
  const auto e2 = FreeWord::generator(2);
  if (psi_e1.is_full_cycle()) {
    for (int q = 0; q <= 2; ++q) {
      if ((psi_e2 * psi_e1.pow(-q)).is_identity())
        return {e1, e2 * FreeWord::generator(1, -q)};
    }
    throw Error(ErrorCode::InternalInconsistency, "no q with psi(e2 e1^-q) = id");
  }
  // psi(e1) = id, so psi(e2) is the 3-cycle
  return {e2, e1.inverse()};
}

}  // namespace braidoka
