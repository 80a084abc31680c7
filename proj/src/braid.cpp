#include "braidoka/braid.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidoka/error.hpp"
#include "braidoka/sl2z.hpp"
#include "text_util.hpp"

namespace braidoka {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw Error(ErrorCode::InvalidArgument, "a braid needs at least 2 strands");
  for (int l : letters_)
    if (l == 0 || std::abs(l) >= strands_)
      throw Error(ErrorCode::InvalidArgument,
                  "generator " + std::to_string(l) + " out of range for " + std::to_string(strands_) + " strands");
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  for (const auto& tok : detail::split_ws(detail::normalize_minus(text))) {
    const auto v = detail::parse_int(tok, "braid word");
    if (v == 0) throw Error(ErrorCode::ParseError, "braid letter 0 is not a generator");
    letters.push_back(static_cast<int>(v));
  }
  int n = 2;
  for (int l : letters) n = std::max(n, std::abs(l) + 1);
  if (strands) {
    if (*strands < n) throw Error(ErrorCode::ParseError, "letter index exceeds strand count");
    n = *strands;
  }
  return BraidWord(n, std::move(letters));
}

BraidWord BraidWord::generator(int strands, int i, std::int64_t power) {
  std::vector<int> letters(static_cast<std::size_t>(std::llabs(power)), power >= 0 ? i : -i);
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::delta(int strands, std::int64_t power) {
  std::vector<int> one;
  for (int top = strands - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) one.push_back(i);
  return BraidWord(strands, std::move(one)).pow(power);
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::pow(std::int64_t k) const {
  const BraidWord base = k >= 0 ? *this : inverse();
  std::vector<int> out;
  out.reserve(base.size() * static_cast<std::size_t>(std::llabs(k)));
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::free_reduced() const {
  std::vector<int> stack;
  for (int l : letters_) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(strands_, std::move(stack));
}

std::string BraidWord::str() const {
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw Error(ErrorCode::StrandMismatch,
                std::to_string(a.strands()) + " vs " + std::to_string(b.strands()) + " strands");
  std::vector<int> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) { return a * b * a.inverse() * b.inverse(); }

Permutation permutation(const BraidWord& b) {
  // pos[k] = strand currently at position k; strand s ends at position end[s].
  const int n = b.strands();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) at[static_cast<std::size_t>(k)] = k;
  for (int l : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(at[static_cast<std::size_t>(k)])] = k + 1;
  return Permutation(std::move(images));
}

std::int64_t exponent_sum(const BraidWord& b) {
  std::int64_t s = 0;
  for (int l : b.letters()) s += l > 0 ? 1 : -1;
  return s;
}

// ---------------------------------------------------------------------------
// Garside machinery. A permutation braid is stored 0-based: s[i] is the end
// position of the strand starting at position i; products read left to right.

namespace {

using Simple = std::vector<int>;

Simple identity_simple(int n) {
  Simple s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

Simple delta_simple(int n) {
  Simple s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = n - 1 - i;
  return s;
}

Simple inverse_simple(const Simple& s) {
  Simple inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  return inv;
}

// Δ^-1 s Δ: σ_i -> σ_{n-i}
Simple flip(const Simple& s) {
  const int n = static_cast<int>(s.size());
  Simple out(s.size());
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n - 1 - s[static_cast<std::size_t>(n - 1 - i)];
  return out;
}

// Δ σ_k^-1 as a permutation braid (k is 0-based).
Simple delta_times_inverse_generator(int n, int k) {
  Simple s = delta_simple(n);
  for (auto& v : s) {
    if (v == k)
      v = k + 1;
    else if (v == k + 1)
      v = k;
  }
  return s;
}

// Left-weight the pair (a, b): move every σ_k that b starts with but that a
// can absorb from b into a. Returns true if anything moved.
bool left_weight(Simple& a, Simple& b) {
  const std::size_t n = a.size();
  bool changed = false;
  for (;;) {
    const Simple ainv = inverse_simple(a);
    std::size_t found = n;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const bool starts_b = b[k] > b[k + 1];
      const bool finishes_a = ainv[k] > ainv[k + 1];
      if (starts_b && !finishes_a) {
        found = k;
        break;
      }
    }
    if (found == n) return changed;
    const int k = static_cast<int>(found);
    for (auto& v : a) {
      if (v == k)
        v = k + 1;
      else if (v == k + 1)
        v = k;
    }
    std::swap(b[found], b[found + 1]);
    changed = true;
  }
}

Permutation to_permutation(const Simple& s) {
  std::vector<int> im(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) im[i] = s[i] + 1;
  return Permutation(std::move(im));
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& b) {
  const int n = b.strands();
  const auto& letters = b.letters();
  std::size_t negatives_after = 0;
  for (int l : letters) negatives_after += l < 0 ? 1 : 0;
  std::int64_t inf = -static_cast<std::int64_t>(negatives_after);

  // Rewrite σ_k^-1 = Δ^-1 (Δ σ_k^-1) and move every Δ^-1 to the front,
  // flipping the factors it passes.
  std::vector<Simple> factors;
  factors.reserve(letters.size());
  for (int l : letters) {
    const int k = std::abs(l) - 1;
    Simple s;
    if (l > 0) {
      s = identity_simple(n);
      std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]);
    } else {
      s = delta_times_inverse_generator(n, k);
      --negatives_after;
    }
    if (negatives_after % 2 == 1) s = flip(s);
    factors.push_back(std::move(s));
  }

  const Simple id = identity_simple(n);
  const Simple delta = delta_simple(n);
  std::vector<Simple> nf;
  for (auto& s : factors) {
    if (s == id) continue;
    nf.push_back(std::move(s));
    for (std::size_t k = nf.size() - 1; k >= 1; --k)
      if (!left_weight(nf[k - 1], nf[k])) break;
    // Keep the list canonical: Δ factors are absorbed, trivial ones dropped.
    while (!nf.empty() && nf.front() == delta) {
      ++inf;
      nf.erase(nf.begin());
    }
    std::erase(nf, id);
  }
  // One right-to-left sweep per appended factor suffices in theory; sweep
  // until stable so the invariant does not rest on that alone.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = nf.size(); k-- > 1;) changed |= left_weight(nf[k - 1], nf[k]);
    while (!nf.empty() && nf.front() == delta) {
      ++inf;
      nf.erase(nf.begin());
    }
    std::erase(nf, id);
  }

  std::vector<Permutation> out;
  out.reserve(nf.size());
  for (const auto& s : nf) out.push_back(to_permutation(s));
  return GarsideNormalForm(n, inf, std::move(out));
}

BraidWord simple_word(const Permutation& p) {
  const int n = p.size();
  Simple s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = p(i + 1) - 1;
  std::vector<int> letters;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < s.size() && s[k] < s[k + 1]) ++k;
    if (k + 1 >= s.size()) break;
    letters.push_back(static_cast<int>(k) + 1);
    std::swap(s[k], s[k + 1]);  // s <- σ_k^-1 s
  }
  return BraidWord(n, std::move(letters));
}

BraidWord GarsideNormalForm::to_word() const {
  BraidWord w = BraidWord::delta(strands_, infimum_);
  for (const auto& f : factors_) w = w * simple_word(f);
  return w;
}

bool braid_eq_garside(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw Error(ErrorCode::StrandMismatch, "braid_eq on different strand counts");
  return normal_form(a) == normal_form(b);
}

bool braid_eq(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw Error(ErrorCode::StrandMismatch, "braid_eq on different strand counts");
  // ker ϑ = <Δ^4> and exponent_sum(Δ^4) = 12, so (ϑ, exponent sum) is faithful on B3.
  if (a.strands() == 3) return exponent_sum(a) == exponent_sum(b) && theta(a) == theta(b);
  return normal_form(a) == normal_form(b);
}

// ---------------------------------------------------------------------------

std::array<std::int64_t, 3> LinkingNumbers::tuple3() const {
  if (n_ != 3) throw Error(ErrorCode::WrongStrandCount, "linking tuple needs 3 strands");
  return {(*this)(2, 3), (*this)(1, 3), (*this)(1, 2)};
}

LinkingNumbers linking_numbers(const BraidWord& b) {
  if (!permutation(b).is_identity()) throw Error(ErrorCode::NotPure, "braid '" + b.str() + "' is not pure");
  const int n = b.strands();
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) at[static_cast<std::size_t>(k)] = k + 1;
  LinkingNumbers crossings(n);
  for (int l : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    const int s = l > 0 ? 1 : -1;
    crossings.at(at[i], at[i + 1]) += s;
    crossings.at(at[i + 1], at[i]) += s;
    std::swap(at[i], at[i + 1]);
  }
  LinkingNumbers out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (crossings(i, j) % 2 != 0)
        throw Error(ErrorCode::InternalInconsistency, "odd crossing count in a pure braid");
      out.at(i, j) = crossings(i, j) / 2;
    }
  return out;
}

LinkingNumbers conjugated_linking(const LinkingNumbers& of_b, const BraidWord& w) {
  if (of_b.strands() != w.strands()) throw Error(ErrorCode::StrandMismatch, "linking/conjugator strand mismatch");
  const Permutation q = permutation(w).inverse();
  LinkingNumbers out(of_b.strands());
  for (int i = 1; i <= of_b.strands(); ++i)
    for (int j = 1; j <= of_b.strands(); ++j) out.at(i, j) = of_b(q(i), q(j));
  return out;
}

}  // namespace braidoka
