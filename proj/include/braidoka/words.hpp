#pragma once

// Free-group words stored as run-length blocks (generator, signed exponent).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidoka {

struct Block {
  int gen = 1;           // generator index, >= 1
  std::int64_t exp = 0;  // nonzero signed exponent

  friend bool operator==(const Block&, const Block&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  // Zero-exponent blocks are dropped; no cancellation is performed, so the
  // stored word may be unreduced.
  explicit FreeWord(std::vector<Block> blocks);

  static FreeWord generator(int gen, std::int64_t exp = 1);
  // Whitespace-separated tokens `a<k>` or `e<k>` with an optional `^n`
  // exponent. The empty string and `1` denote the identity.
  static FreeWord parse(std::string_view text);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::int64_t length() const;
  int max_generator() const;
  std::int64_t exponent_sum(int gen) const;

  FreeWord inverse() const;
  // Signed letters, +g for a_g and -g for a_g^-1.
  std::vector<int> letters() const;

  std::string str(char prefix = 'a') const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Block> blocks_;
};

// Concatenate without reduction.
FreeWord concat(const FreeWord& u, const FreeWord& v);
// Group product; the result is reduced.
FreeWord operator*(const FreeWord& u, const FreeWord& v);
FreeWord power(const FreeWord& w, std::int64_t k);
// u v u^-1 v^-1
FreeWord commutator(const FreeWord& u, const FreeWord& v);

FreeWord reduce(const FreeWord& w);
bool is_reduced(const FreeWord& w);
bool equal_in_group(const FreeWord& u, const FreeWord& v);

// A cyclically reduced word, compared up to rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  // `w` must be reduced and cyclically reduced.
  explicit CyclicWord(FreeWord w);

  // The linear representative as produced by cyclic_reduce.
  const FreeWord& word() const { return word_; }
  // Block cycle with the wrap-around run merged: unique up to rotation.
  const std::vector<Block>& cycle() const { return cycle_; }
  bool empty() const { return word_.empty(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b);

 private:
  FreeWord word_;
  std::vector<Block> cycle_;
};

struct CyclicReduction {
  FreeWord conjugator;
  CyclicWord core;
};

// w = conjugator * core * conjugator^-1
CyclicReduction cyclic_reduce(const FreeWord& w);

bool free_conjugate(const FreeWord& u, const FreeWord& v);

struct PrimitiveRoot {
  FreeWord root;
  std::int64_t power = 1;
};

// w = root^power, power >= 1, root not a proper power. Throws IdentityInput on ε.
PrimitiveRoot primitive_root(const FreeWord& w);

// Peripheral elements of F2 = <a1, a2>.
enum class Peripheral { A1, A2, A1A2Inv };

std::string_view to_string(Peripheral p);
FreeWord peripheral_word(Peripheral p);

struct PeripheralMatch {
  bool trivial = false;  // w = ε; peripheral is then meaningless and power 0
  Peripheral peripheral = Peripheral::A1;
  std::int64_t power = 0;
};

// Decides whether w is conjugate to v^k for v in {a1, a2, (a1 a2)^-1}.
std::optional<PeripheralMatch> is_conjugate_into_peripheral(const FreeWord& w);

}  // namespace braidoka
