#include "braidoka/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "braidoka/error.hpp"
#include "text_util.hpp"

namespace braidoka {

FreeWord::FreeWord(std::vector<Block> blocks) {
  blocks_.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.gen < 1) throw Error(ErrorCode::InvalidArgument, "generator index must be >= 1");
    if (b.exp != 0) blocks_.push_back(b);
  }
}

FreeWord FreeWord::generator(int gen, std::int64_t exp) { return FreeWord({{gen, exp}}); }

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Block> blocks;
  for (const auto& raw : detail::split_ws(detail::normalize_minus(text))) {
    if (raw == "1" || raw == "id") continue;
    std::string_view tok = raw;
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'e'))
      throw Error(ErrorCode::ParseError, "bad free-group token '" + raw + "'");
    tok.remove_prefix(1);
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      exp = detail::parse_int(e, raw);
      tok = tok.substr(0, caret);
    }
    const auto gen = detail::parse_int(tok, raw);
    if (gen < 1) throw Error(ErrorCode::ParseError, "generator index must be >= 1 in '" + raw + "'");
    blocks.push_back({static_cast<int>(gen), exp});
  }
  return FreeWord(std::move(blocks));
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const auto& b : blocks_) n += std::llabs(b.exp);
  return n;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (const auto& b : blocks_) m = std::max(m, b.gen);
  return m;
}

std::int64_t FreeWord::exponent_sum(int gen) const {
  std::int64_t s = 0;
  for (const auto& b : blocks_)
    if (b.gen == gen) s += b.exp;
  return s;
}

FreeWord FreeWord::inverse() const {
  std::vector<Block> out(blocks_.rbegin(), blocks_.rend());
  for (auto& b : out) b.exp = -b.exp;
  return FreeWord(std::move(out));
}

std::vector<int> FreeWord::letters() const {
  std::vector<int> out;
  for (const auto& b : blocks_) {
    const int l = b.exp > 0 ? b.gen : -b.gen;
    for (std::int64_t i = 0; i < std::llabs(b.exp); ++i) out.push_back(l);
  }
  return out;
}

std::string FreeWord::str(char prefix) const {
  if (blocks_.empty()) return "1";
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(b.gen);
    if (b.exp != 1) out += "^" + std::to_string(b.exp);
  }
  return out;
}

namespace {

// Push a block onto a reduced block stack, cancelling as needed.
void push_reduced(std::vector<Block>& stack, Block b) {
  if (b.exp == 0) return;
  if (!stack.empty() && stack.back().gen == b.gen) {
    stack.back().exp += b.exp;
    if (stack.back().exp == 0) stack.pop_back();
  } else {
    stack.push_back(b);
  }
}

FreeWord from_reduced_blocks(std::vector<Block> blocks) { return FreeWord(std::move(blocks)); }

}  // namespace

FreeWord reduce(const FreeWord& w) {
  std::vector<Block> stack;
  stack.reserve(w.blocks().size());
  for (const auto& b : w.blocks()) push_reduced(stack, b);
  return from_reduced_blocks(std::move(stack));
}

bool is_reduced(const FreeWord& w) {
  const auto& bs = w.blocks();
  for (std::size_t i = 1; i < bs.size(); ++i)
    if (bs[i].gen == bs[i - 1].gen) return false;
  return true;
}

bool equal_in_group(const FreeWord& u, const FreeWord& v) { return reduce(u) == reduce(v); }

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  std::vector<Block> out = u.blocks();
  out.insert(out.end(), v.blocks().begin(), v.blocks().end());
  return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  std::vector<Block> stack;
  for (const auto& b : u.blocks()) push_reduced(stack, b);
  for (const auto& b : v.blocks()) push_reduced(stack, b);
  return from_reduced_blocks(std::move(stack));
}

FreeWord power(const FreeWord& w, std::int64_t k) {
  const FreeWord base = k >= 0 ? reduce(w) : reduce(w).inverse();
  FreeWord out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out = out * base;
  return out;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Block> merged_cycle(const std::vector<Block>& linear) {
  std::vector<Block> c = linear;
  if (c.size() >= 2 && c.front().gen == c.back().gen) {
    c.front().exp += c.back().exp;
    c.pop_back();
  }
  return c;
}

bool is_rotation(const std::vector<Block>& a, const std::vector<Block>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

CyclicWord::CyclicWord(FreeWord w) : word_(std::move(w)), cycle_(merged_cycle(word_.blocks())) {}

bool operator==(const CyclicWord& a, const CyclicWord& b) { return is_rotation(a.cycle_, b.cycle_); }

CyclicReduction cyclic_reduce(const FreeWord& w) {
  std::vector<Block> core = reduce(w).blocks();
  std::vector<Block> conj;
  std::size_t lo = 0, hi = core.size();  // active range [lo, hi)
  while (hi - lo >= 2 && core[lo].gen == core[hi - 1].gen) {
    Block& first = core[lo];
    Block& last = core[hi - 1];
    const bool opposite = (first.exp > 0) != (last.exp > 0);
    if (!opposite) break;  // same sign: already cyclically reduced
    const std::int64_t t = std::min(std::llabs(first.exp), std::llabs(last.exp));
    const std::int64_t s = first.exp > 0 ? 1 : -1;
    conj.push_back({first.gen, s * t});
    first.exp -= s * t;
    last.exp += s * t;
    if (first.exp == 0) ++lo;
    if (last.exp == 0) --hi;
  }
  std::vector<Block> kept(core.begin() + static_cast<std::ptrdiff_t>(lo),
                          core.begin() + static_cast<std::ptrdiff_t>(hi));
  return {reduce(FreeWord(std::move(conj))), CyclicWord(reduce(FreeWord(std::move(kept))))};
}

bool free_conjugate(const FreeWord& u, const FreeWord& v) {
  return cyclic_reduce(u).core == cyclic_reduce(v).core;
}

PrimitiveRoot primitive_root(const FreeWord& w) {
  const auto cr = cyclic_reduce(w);
  if (cr.core.empty()) throw Error(ErrorCode::IdentityInput, "primitive_root of the identity");

  // Rotate the linear core so that it is literally the merged cycle:
  // core = B^-1 K B where B is the trailing block moved to the front.
  const auto& lin = cr.core.word().blocks();
  FreeWord conj = cr.conjugator;
  if (lin.size() >= 2 && lin.front().gen == lin.back().gen)
    conj = conj * FreeWord({lin.back()}).inverse();
  const auto& cyc = cr.core.cycle();

  if (cyc.size() == 1) {
    const Block b = cyc.front();
    const std::int64_t s = b.exp > 0 ? 1 : -1;
    const FreeWord root = conj * FreeWord::generator(b.gen, s) * conj.inverse();
    return {root, std::llabs(b.exp)};
  }
  const std::size_t n = cyc.size();
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = cyc[i] == cyc[(i + p) % n];
    if (ok) {
      period = p;
      break;
    }
  }
  const FreeWord rootcore(std::vector<Block>(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(period)));
  return {conj * rootcore * conj.inverse(), static_cast<std::int64_t>(n / period)};
}

std::string_view to_string(Peripheral p) {
  switch (p) {
    case Peripheral::A1: return "a1";
    case Peripheral::A2: return "a2";
    case Peripheral::A1A2Inv: return "(a1 a2)^-1";
  }
  return "?";
}

FreeWord peripheral_word(Peripheral p) {
  switch (p) {
    case Peripheral::A1: return FreeWord::generator(1);
    case Peripheral::A2: return FreeWord::generator(2);
    case Peripheral::A1A2Inv: return FreeWord({{2, -1}, {1, -1}});
  }
  return {};
}

std::optional<PeripheralMatch> is_conjugate_into_peripheral(const FreeWord& w) {
  const auto cr = cyclic_reduce(w);
  const auto& cyc = cr.core.cycle();
  if (cyc.empty()) return PeripheralMatch{true, Peripheral::A1, 0};
  if (cyc.size() == 1) {
    if (cyc[0].gen == 1) return PeripheralMatch{false, Peripheral::A1, cyc[0].exp};
    if (cyc[0].gen == 2) return PeripheralMatch{false, Peripheral::A2, cyc[0].exp};
    return std::nullopt;
  }
  // Rotation of (a2^-1 a1^-1)^k or (a1 a2)^k: alternating a1/a2, all exponents equal to ±1.
  if (cyc.size() % 2 != 0) return std::nullopt;
  const std::int64_t e = cyc[0].exp;
  if (e != 1 && e != -1) return std::nullopt;
  for (const auto& b : cyc)
    if (b.exp != e || (b.gen != 1 && b.gen != 2)) return std::nullopt;
  const auto k = static_cast<std::int64_t>(cyc.size() / 2);
  return PeripheralMatch{false, Peripheral::A1A2Inv, e < 0 ? k : -k};
}

}  // namespace braidoka
